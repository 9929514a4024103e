"""Newton polyhedra of monomial ideals and the invariants read off them.

For a monomial ideal ``a`` with generators ``G``, the Newton polyhedron is
``P(a) = conv(G) + R^n_{>=0}``. Its non-coordinate facets ``<A_j, x> >= b_j``
are found as the extreme rays ``(A_j, b_j)`` with ``b_j > 0`` of the cone of
valid inequalities ``{(y, t) : y >= 0, t >= 0, <y, g> >= t for g in G}``.

From the facets:

* multiplicity ``e(a) = n! * vol(R^n_{>=0} \\ P(a))``;
* log canonical threshold ``lct(a) = min_j <A_j, 1> / b_j``;
* the integral closure of ``a^m`` is the set of lattice points of ``m * P(a)``;
* the radical pseudo-valuation ``u -> min_j <A_j, u> / b_j``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import NotPrimary, UnitIdeal, ZeroIdeal
from .monomial import (
    Exponent,
    MonomialIdeal,
    axis_ranges,
    grid_minimal_points,
    pure_power_degrees,
)
from .polyhedra import covolume, extreme_rays, rank

INF = math.inf


@dataclass(frozen=True)
class Facet:
    """The inequality ``<normal, x> >= offset``; ``normal`` is primitive."""

    normal: tuple[int, ...]
    offset: Fraction

    def value(self, u) -> Fraction:
        return sum((a * x for a, x in zip(self.normal, u)), Fraction(0))


@dataclass(frozen=True)
class NewtonPolyhedron:
    dim: int
    facets: tuple[Facet, ...]
    vertices: tuple[tuple[Fraction, ...], ...]
    source: MonomialIdeal

    def contains(self, x) -> bool:
        return all(xi >= 0 for xi in x) and all(f.value(x) >= f.offset for f in self.facets)

    def offsets_lcm(self) -> int:
        """lcm of the facet offsets: the divisibility that makes contact loci exact."""
        return math.lcm(*(int(f.offset) for f in self.facets))


def _require_proper(a: MonomialIdeal) -> None:
    if a.is_zero:
        raise ZeroIdeal("the zero ideal has no Newton polyhedron")
    if a.is_unit:
        raise UnitIdeal("the unit ideal has the whole orthant as Newton polyhedron")


@lru_cache(maxsize=512)
def build(a: MonomialIdeal) -> NewtonPolyhedron:
    """Facet and vertex description of the Newton polyhedron of ``a``."""
    _require_proper(a)
    n = a.dim
    rows = [tuple(int(i == j) for j in range(n + 1)) for i in range(n + 1)]
    # Pure powers first keeps the intermediate cones small.
    gens = sorted(a.gens, key=lambda g: (sum(1 for x in g if x) != 1, sum(g)))
    rows += [tuple(g) + (-1,) for g in gens]
    facets = []
    for z in extreme_rays(rows, n + 1):
        y, t = z[:-1], z[-1]
        if t <= 0:
            continue
        g = math.gcd(*y)
        facets.append(Facet(tuple(x // g for x in y), Fraction(t, g)))
    facets.sort(key=lambda f: (f.normal, f.offset))

    # Vertices: generators where the tight constraints have full rank.
    # Facets pass through lattice points, so offsets are integers here.
    G = np.asarray(a.gens, dtype=np.int64)
    N = np.asarray([f.normal for f in facets], dtype=np.int64).reshape(-1, n)
    b = np.asarray([int(f.offset) for f in facets], dtype=np.int64)
    on_facet = (G @ N.T) == b[None, :]
    counts = on_facet.sum(axis=1) + (G == 0).sum(axis=1)
    verts = []
    for k in np.flatnonzero(counts >= n):
        g = a.gens[k]
        tight = [facets[j].normal for j in np.flatnonzero(on_facet[k])]
        tight += [tuple(int(i == j) for j in range(n)) for i in range(n) if g[i] == 0]
        if rank(tight) == n:
            verts.append(tuple(Fraction(x) for x in g))
    return NewtonPolyhedron(n, tuple(facets), tuple(sorted(verts)), a)


def newton_covolume(a: MonomialIdeal) -> Fraction:
    """Euclidean volume of the orthant minus the Newton polyhedron."""
    if a.is_unit:
        return Fraction(0)
    if pure_power_degrees(a) is None:
        raise NotPrimary(f"{a} is not primary at the origin; covolume is infinite")
    P = build(a)
    return covolume([(f.normal, f.offset) for f in P.facets], a.dim)


def multiplicity(a: MonomialIdeal) -> int:
    """Hilbert-Samuel multiplicity of an ideal primary to the origin."""
    e = math.factorial(a.dim) * newton_covolume(a)
    if e.denominator != 1:
        raise AssertionError(f"non-integral multiplicity {e} for {a}")
    return int(e)


def lct(a: MonomialIdeal) -> Fraction | float:
    """Log canonical threshold of a monomial ideal.

    The largest ``c`` with ``(1, ..., 1)`` in ``c * P(a)``. The zero ideal
    gets 0 and the unit ideal gets ``math.inf``.
    """
    if a.is_zero:
        return Fraction(0)
    if a.is_unit:
        return INF
    P = build(a)
    return min(Fraction(sum(f.normal)) / f.offset for f in P.facets)


def _closure_member_grid(P: NewtonPolyhedron, m: int, shape) -> np.ndarray:
    axes = axis_ranges(shape)
    member = np.ones(shape, dtype=bool)
    for f in P.facets:
        # Offsets are integers for lattice generators; keep the check exact anyway.
        num, den = f.offset.numerator, f.offset.denominator
        lhs = sum(int(c) * axes[i] for i, c in enumerate(f.normal) if c)
        member &= lhs * den >= m * num
    return member


def integral_closure_power(a: MonomialIdeal, m: int) -> MonomialIdeal:
    """Integral closure of ``a^m``: the lattice points of ``m * P(a)``."""
    if m < 1:
        raise ValueError("m must be positive")
    _require_proper(a)
    d = pure_power_degrees(a)
    if d is None:
        raise NotPrimary(f"{a} is not primary; closure enumeration needs pure powers")
    P = build(a)
    shape = tuple(m * di + 1 for di in d)
    member = _closure_member_grid(P, m, shape)
    return MonomialIdeal._trusted(a.dim, grid_minimal_points(member))


def radical_valuation(a: MonomialIdeal):
    """The pseudo-valuation ``min_j <A_j, u> / b_j`` built from the facets.

    Its ideals ``b_m`` are the integral closures of ``a^m``.
    """
    from .psval import MonomialPseudoValuation, WeightRay

    P = build(a)
    return MonomialPseudoValuation(
        a.dim, tuple(WeightRay(f.normal, 1 / f.offset) for f in P.facets)
    )


def in_scaled_polyhedron(P: NewtonPolyhedron, u: Exponent, m: int) -> bool:
    return all(x >= 0 for x in u) and all(f.value(u) >= m * f.offset for f in P.facets)
