"""Exact polyhedral computations in small dimension.

Everything is integer or ``Fraction`` arithmetic; no floating point enters.

* ``extreme_rays`` runs the double description method on a pointed cone
  ``{z : <r, z> >= 0 for every row r}`` with integer rows, keeping rays as
  primitive integer vectors and adjacency by the combinatorial test.
* ``polytope_vertices`` homogenizes an H-description and reads vertices off
  the extreme rays.
* ``polytope_volume`` triangulates by pulling: cone from a vertex over every
  facet not containing it, recursively.
* ``covolume`` is the volume of ``R^n_{>=0}`` minus an upward-closed polyhedron
  ``{u >= 0 : <A_j, u> >= b_j}``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Sequence

from .errors import InfiniteVolume


def _gcd_normalize(v: Sequence[int]) -> tuple[int, ...]:
    g = reduce(math.gcd, (abs(x) for x in v), 0)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def integer_row(coeffs: Sequence[Fraction | int]) -> tuple[int, ...]:
    """Scale a rational vector by a positive factor to a primitive integer one."""
    den = reduce(math.lcm, (Fraction(c).denominator for c in coeffs), 1)
    return _gcd_normalize([int(Fraction(c) * den) for c in coeffs])


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def rank(rows: Sequence[Sequence[Fraction | int]]) -> int:
    """Rank over Q by fraction-exact Gaussian elimination."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    r = 0
    ncols = len(m[0])
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            if m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def determinant(rows: Sequence[Sequence[Fraction | int]]) -> Fraction:
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


def _inverse_columns(rows: list[tuple[int, ...]]) -> list[list[Fraction]]:
    # Columns of the inverse of a square nonsingular integer matrix.
    n = len(rows)
    aug = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [[aug[i][n + j] for i in range(n)] for j in range(n)]


def extreme_rays(rows: Sequence[Sequence[int]], dim: int) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone ``{z in Q^dim : <r, z> >= 0}``.

    Rows must be integer vectors of length ``dim`` and must span ``Q^dim``
    (otherwise the cone has a lineality space and no extreme rays in this
    sense). Returned rays are primitive integer vectors, sorted.
    """
    rows = [tuple(int(x) for x in r) for r in rows]
    basis: list[int] = []
    for i, r in enumerate(rows):
        if any(r) and rank([rows[j] for j in basis] + [r]) == len(basis) + 1:
            basis.append(i)
            if len(basis) == dim:
                break
    if len(basis) < dim:
        raise ValueError("constraint rows do not span the space: cone is not pointed")

    cols = _inverse_columns([rows[i] for i in basis])
    rays = [integer_row(c) for c in cols]
    # tight[k] is a bitmask over processed row indices.
    tight = []
    for k in range(dim):
        mask = 0
        for j, i in enumerate(basis):
            if j != k:
                mask |= 1 << i
        tight.append(mask)

    rest = [i for i in range(len(rows)) if i not in set(basis)]
    for i in rest:
        r = rows[i]
        vals = [_dot(r, z) for z in rays]
        neg = [k for k, v in enumerate(vals) if v < 0]
        if not neg:
            bit = 1 << i
            tight = [t | bit if vals[k] == 0 else t for k, t in enumerate(tight)]
            continue
        pos = [k for k, v in enumerate(vals) if v > 0]
        zero = [k for k, v in enumerate(vals) if v == 0]
        new_rays: list[tuple[int, ...]] = []
        new_tight: list[int] = []
        for p in pos:
            for q in neg:
                common = tight[p] & tight[q]
                if bin(common).count("1") < dim - 2:
                    continue
                if any(
                    k != p and k != q and (common & tight[k]) == common
                    for k in range(len(rays))
                ):
                    continue
                vp, vq = vals[p], vals[q]
                z = _gcd_normalize([vp * a - vq * b for a, b in zip(rays[q], rays[p])])
                new_rays.append(z)
                new_tight.append(common | (1 << i))
        bit = 1 << i
        rays = [rays[k] for k in pos] + [rays[k] for k in zero] + new_rays
        tight = [tight[k] for k in pos] + [tight[k] | bit for k in zero] + new_tight
    return sorted(set(rays))


def polytope_vertices(
    halfspaces: Sequence[tuple[Sequence[Fraction | int], Fraction | int]], dim: int
) -> list[tuple[Fraction, ...]]:
    """Vertices of the bounded polyhedron ``{x : <a, x> >= b}`` (empty list if empty).

    The description must include enough constraints to make the polyhedron
    bounded; unbounded input raises ``ValueError``.
    """
    rows = [integer_row(list(a) + [-Fraction(b)]) for a, b in halfspaces]
    rows.append(tuple([0] * dim + [1]))
    verts = []
    for z in extreme_rays(rows, dim + 1):
        s = z[-1]
        if s == 0:
            raise ValueError("polyhedron is unbounded")
        verts.append(tuple(Fraction(x, s) for x in z[:-1]))
    return sorted(set(verts))


def _affine_dim(points: Sequence[Sequence[Fraction]]) -> int:
    if len(points) <= 1:
        return len(points) - 1
    p0 = points[0]
    return rank([[a - b for a, b in zip(p, p0)] for p in points[1:]])


def pulling_triangulation(
    vertices: Sequence[Sequence[Fraction]],
    halfspaces: Sequence[tuple[Sequence[Fraction | int], Fraction | int]],
) -> list[tuple[int, ...]]:
    """Full-dimensional simplices (as vertex index tuples) covering the polytope.

    Simplices have pairwise disjoint interiors. Faces are identified by the
    sets of vertices tight on each constraint.
    """
    dim = len(vertices[0])
    tight_sets = []
    for a, b in halfspaces:
        s = frozenset(
            k for k, v in enumerate(vertices) if sum(Fraction(x) * y for x, y in zip(a, v)) == b
        )
        if s:
            tight_sets.append(s)
    dims: dict[frozenset, int] = {}

    def face_dim(face: frozenset) -> int:
        if face not in dims:
            dims[face] = _affine_dim([vertices[k] for k in sorted(face)])
        return dims[face]

    def triangulate(face: frozenset, d: int) -> list[tuple[int, ...]]:
        if d == 0:
            return [(min(face),)]
        apex = min(face)
        facets = set()
        for t in tight_sets:
            sub = face & t
            if sub != face and len(sub) >= d and face_dim(sub) == d - 1:
                facets.add(sub)
        out = []
        for sub in facets:
            if apex in sub:
                continue
            for simplex in triangulate(sub, d - 1):
                out.append((apex,) + simplex)
        return out

    full = frozenset(range(len(vertices)))
    d = face_dim(full)
    if d < dim:
        return []
    return triangulate(full, d)


def simplex_volume(points: Sequence[Sequence[Fraction]]) -> Fraction:
    p0 = points[0]
    n = len(p0)
    det = determinant([[a - b for a, b in zip(p, p0)] for p in points[1:]])
    return abs(det) / math.factorial(n)


def polytope_volume(
    halfspaces: Sequence[tuple[Sequence[Fraction | int], Fraction | int]], dim: int
) -> Fraction:
    """Exact Euclidean volume of a bounded H-polytope (0 if lower-dimensional)."""
    verts = polytope_vertices(halfspaces, dim)
    if len(verts) <= dim:
        return Fraction(0)
    simplices = pulling_triangulation(verts, halfspaces)
    return sum((simplex_volume([verts[k] for k in s]) for s in simplices), Fraction(0))


def covolume(
    halfspaces: Sequence[tuple[Sequence[Fraction | int], Fraction | int]], dim: int
) -> Fraction:
    """Volume of ``{u >= 0 : <A_j, u> < b_j for some j}``.

    Normals must be non-negative and offsets positive. A normal with a zero
    entry makes the region an unbounded cylinder, which raises
    ``InfiniteVolume``. The region lies in the box whose i-th side is
    ``max_j b_j / A_ji``, so the answer is that box minus the clipped polyhedron.
    """
    hs = [(tuple(Fraction(x) for x in a), Fraction(b)) for a, b in halfspaces]
    if not hs:
        return Fraction(0)
    for a, b in hs:
        if len(a) != dim:
            raise ValueError("normal of wrong length")
        if b <= 0 or any(x < 0 for x in a):
            raise ValueError("covolume needs non-negative normals and positive offsets")
        if any(x == 0 for x in a):
            raise InfiniteVolume("complement region is unbounded")
    sides = [max(b / a[i] for a, b in hs) for i in range(dim)]
    box = [(tuple(Fraction(int(j == i)) for j in range(dim)), Fraction(0)) for i in range(dim)]
    box += [(tuple(Fraction(-int(j == i)) for j in range(dim)), -sides[i]) for i in range(dim)]
    inner = polytope_volume(hs + box, dim)
    return math.prod(sides, start=Fraction(1)) - inner
