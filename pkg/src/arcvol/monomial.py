"""Monomial ideals in n variables, stored as their minimal generator antichain.

An exponent ``u`` stands for the monomial ``x^u``. An ideal is membership-closed
upward under the componentwise order, so everything here reduces to dominance
checks on small integer vectors. Large generator sets (powers of ideals in
three variables easily reach thousands of generators) go through numpy, either
as dense boolean grids over the bounding box or as chunked broadcasts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, NotPrimary, ParseError

MAX_DIM = 6
# Largest dense boolean grid (in cells) we are willing to allocate.
GRID_LIMIT = 1 << 24
_CHUNK = 1 << 18

Exponent = tuple[int, ...]


def _upward_closure(marks: np.ndarray) -> np.ndarray:
    out = marks
    for ax in range(marks.ndim):
        out = np.logical_or.accumulate(out, axis=ax)
    return out


def axis_ranges(shape) -> list[np.ndarray]:
    """Per-axis index vectors shaped to broadcast against a grid of ``shape``."""
    n = len(shape)
    return [
        np.arange(s, dtype=np.int64).reshape([-1 if i == j else 1 for j in range(n)])
        for i, s in enumerate(shape)
    ]


def grid_minimal_points(member: np.ndarray) -> list[Exponent]:
    """Minimal cells of an upward-closed boolean grid, in lexicographic order."""
    mask = member.copy()
    nd = member.ndim
    for ax in range(nd):
        dst = [slice(None)] * nd
        src = [slice(None)] * nd
        dst[ax] = slice(1, None)
        src[ax] = slice(None, -1)
        mask[tuple(dst)] &= ~member[tuple(src)]
    return [tuple(int(x) for x in row) for row in np.argwhere(mask)]


def _minimal_small(pts: list[Exponent]) -> list[Exponent]:
    pts = sorted(pts, key=lambda p: (sum(p), p))
    kept: list[Exponent] = []
    for p in pts:
        if not any(all(q[i] <= p[i] for i in range(len(p))) for q in kept):
            kept.append(p)
    return sorted(kept)


def _minimal_scan(arr: np.ndarray) -> list[Exponent]:
    # Sorting by total degree means a dominating point always comes first.
    order = np.lexsort(arr.T[::-1])
    arr = arr[order]
    arr = arr[np.argsort(arr.sum(axis=1), kind="stable")]
    kept = np.empty((0, arr.shape[1]), dtype=np.int64)
    for p in arr:
        if kept.shape[0] and np.any(np.all(kept <= p, axis=1)):
            continue
        kept = np.vstack([kept, p])
    return sorted(tuple(int(x) for x in row) for row in kept)


def _minimal(points: Iterable[Sequence[int]], dim: int) -> tuple[Exponent, ...]:
    pts = {tuple(int(x) for x in p) for p in points}
    if not pts:
        return ()
    if len(pts) <= 48:
        return tuple(_minimal_small(list(pts)))
    arr = np.array(sorted(pts), dtype=np.int64).reshape(-1, dim)
    shape = tuple(int(x) + 1 for x in arr.max(axis=0))
    if math.prod(shape) <= GRID_LIMIT:
        marks = np.zeros(shape, dtype=bool)
        marks[tuple(arr.T)] = True
        return tuple(grid_minimal_points(_upward_closure(marks)))
    return tuple(_minimal_scan(arr))


def _check_exponent(u: Sequence[int], dim: int) -> Exponent:
    u = tuple(int(x) for x in u)
    if len(u) != dim:
        raise DimensionMismatch(f"exponent {u} has length {len(u)}, expected {dim}")
    if any(x < 0 for x in u):
        raise ValueError(f"exponent {u} has a negative entry")
    return u


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    ``gens`` is normalized on construction to the sorted antichain of minimal
    elements. No generators means the zero ideal; the single generator
    ``(0,...,0)`` is the unit ideal.
    """

    dim: int
    gens: tuple[Exponent, ...] = ()

    def __post_init__(self):
        if not 1 <= self.dim <= MAX_DIM:
            raise ValueError(f"dimension must be in 1..{MAX_DIM}, got {self.dim}")
        gens = [_check_exponent(g, self.dim) for g in self.gens]
        object.__setattr__(self, "gens", _minimal(gens, self.dim))

    @classmethod
    def _trusted(cls, dim: int, gens: Sequence[Exponent]) -> "MonomialIdeal":
        # Skips normalization; callers guarantee a sorted antichain.
        obj = object.__new__(cls)
        object.__setattr__(obj, "dim", dim)
        object.__setattr__(obj, "gens", tuple(gens))
        return obj

    @classmethod
    def unit(cls, dim: int) -> "MonomialIdeal":
        return cls._trusted(dim, [(0,) * dim])

    @classmethod
    def zero(cls, dim: int) -> "MonomialIdeal":
        return cls._trusted(dim, [])

    @classmethod
    def maximal(cls, dim: int) -> "MonomialIdeal":
        return cls._trusted(dim, sorted(tuple(int(i == j) for j in range(dim)) for i in range(dim)))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.dim,)

    @property
    def pure_powers(self) -> tuple[int, ...] | None:
        """Smallest d_i with x_i^{d_i} in the ideal, or None if some axis has none."""
        return pure_power_degrees(self)

    def contains(self, u: Sequence[int]) -> bool:
        return contains(self, u)

    def __contains__(self, u) -> bool:
        return contains(self, u)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return intersect(self, other)

    def __pow__(self, k: int) -> "MonomialIdeal":
        return power(self, k)

    def __le__(self, other: "MonomialIdeal") -> bool:
        return is_subideal(self, other)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        names = _var_names(self.dim)
        parts = []
        for g in self.gens:
            mono = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(g) if e
            )
            parts.append(mono or "1")
        return "(" + ", ".join(parts) + ")"


def _var_names(n: int) -> list[str]:
    if n <= 4:
        return list("xyzw"[:n])
    return [f"x{i + 1}" for i in range(n)]


def _same_dim(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.dim != b.dim:
        raise DimensionMismatch(f"ideals live in dimensions {a.dim} and {b.dim}")


def minimalize(gens: Iterable[Sequence[int]], dim: int) -> MonomialIdeal:
    """The ideal generated by ``gens``, reduced to its minimal antichain."""
    return MonomialIdeal(dim, tuple(gens))


def contains(a: MonomialIdeal, u: Sequence[int]) -> bool:
    u = _check_exponent(u, a.dim)
    return any(all(g[i] <= u[i] for i in range(a.dim)) for g in a.gens)


def divisible_mask(points: np.ndarray, gens: Sequence[Exponent]) -> np.ndarray:
    """Boolean mask: which rows of ``points`` are divisible by some generator."""
    points = np.asarray(points, dtype=np.int64)
    out = np.zeros(points.shape[0], dtype=bool)
    if not len(gens) or not points.shape[0]:
        return out
    g = np.asarray(gens, dtype=np.int64)
    step = max(1, _CHUNK // max(1, len(gens)))
    for lo in range(0, points.shape[0], step):
        blk = points[lo : lo + step]
        out[lo : lo + step] = np.any(np.all(g[None, :, :] <= blk[:, None, :], axis=2), axis=1)
    return out


def is_subideal(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """True iff a is contained in b."""
    _same_dim(a, b)
    if a.is_zero:
        return True
    if len(a.gens) * len(b.gens) <= 256:
        return all(contains(b, g) for g in a.gens)
    return bool(np.all(divisible_mask(np.array(a.gens), b.gens)))


def _pairwise(a: MonomialIdeal, b: MonomialIdeal, op) -> MonomialIdeal:
    A = np.asarray(a.gens, dtype=np.int64)
    B = np.asarray(b.gens, dtype=np.int64)
    if A.shape[0] > B.shape[0]:
        A, B = B, A
    step = max(1, _CHUNK // B.shape[0])
    cands: set[Exponent] = set()
    for lo in range(0, A.shape[0], step):
        blk = op(A[lo : lo + step, None, :], B[None, :, :]).reshape(-1, a.dim)
        cands.update(_minimal(blk.tolist(), a.dim))
    return MonomialIdeal._trusted(a.dim, _minimal(cands, a.dim))


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _same_dim(a, b)
    return MonomialIdeal._trusted(a.dim, _minimal(a.gens + b.gens, a.dim))


def product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _same_dim(a, b)
    if a.is_zero or b.is_zero:
        return MonomialIdeal.zero(a.dim)
    return _pairwise(a, b, np.add)


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _same_dim(a, b)
    if a.is_zero or b.is_zero:
        return MonomialIdeal.zero(a.dim)
    return _pairwise(a, b, np.maximum)


def power(a: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise ValueError("power must be non-negative")
    if k == 0:
        return MonomialIdeal.unit(a.dim)
    out = a
    for _ in range(k - 1):
        out = product(out, a)
    return out


def pure_power_degrees(a: MonomialIdeal) -> tuple[int, ...] | None:
    degs: list[int] = []
    for i in range(a.dim):
        best = None
        for g in a.gens:
            if all(g[j] == 0 for j in range(a.dim) if j != i):
                best = g[i] if best is None else min(best, g[i])
        if best is None:
            return None
        degs.append(best)
    return tuple(degs)


def is_primary_at_origin(a: MonomialIdeal) -> bool:
    """True iff every axis carries a pure power (the unit ideal counts)."""
    return pure_power_degrees(a) is not None


def colength(a: MonomialIdeal) -> int:
    """Number of standard monomials, i.e. the length of R/a.

    Counted through staircase heights: for each exponent prefix in the box
    below the pure powers, the smallest last coordinate that lands in ``a``.
    """
    d = pure_power_degrees(a)
    if d is None:
        raise NotPrimary(f"{a} is not primary at the origin; colength is infinite")
    if a.is_unit:
        return 0
    if a.dim == 1:
        return d[0]
    head = d[:-1]
    heights = np.full(head, d[-1], dtype=np.int64)
    g = np.asarray(a.gens, dtype=np.int64)
    inside = np.all(g[:, :-1] < np.asarray(head), axis=1)
    g = g[inside]
    np.minimum.at(heights, tuple(g[:, :-1].T), g[:, -1])
    for ax in range(heights.ndim):
        heights = np.minimum.accumulate(heights, axis=ax)
    return int(heights.sum())


def standard_monomials(a: MonomialIdeal) -> list[Exponent]:
    """All exponents outside ``a``; only sensible for small primary ideals."""
    d = pure_power_degrees(a)
    if d is None:
        raise NotPrimary(f"{a} is not primary at the origin")
    if a.is_unit:
        return []
    pts = np.indices(d).reshape(a.dim, -1).T
    keep = ~divisible_mask(pts, a.gens)
    return [tuple(int(x) for x in p) for p in pts[keep]]


def parse_ideal(text: str, max_dim: int = MAX_DIM) -> MonomialIdeal:
    """Read the ideal text format.

    First content line: the dimension n. Every further non-empty line not
    starting with ``#`` holds one generator as n non-negative integers.
    """
    n = None
    gens: list[Exponent] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise ParseError("expected the dimension n alone on the first line", lineno)
            try:
                n = int(fields[0])
            except ValueError:
                raise ParseError(f"dimension {fields[0]!r} is not an integer", lineno) from None
            if not 1 <= n <= max_dim:
                raise ParseError(f"dimension {n} outside 1..{max_dim}", lineno)
            continue
        if len(fields) != n:
            raise ParseError(f"expected {n} exponents, found {len(fields)}", lineno)
        try:
            u = tuple(int(f) for f in fields)
        except ValueError:
            raise ParseError(f"non-integer exponent in {line!r}", lineno) from None
        if any(x < 0 for x in u):
            raise ParseError(f"negative exponent in {line!r}", lineno)
        gens.append(u)
    if n is None:
        raise ParseError("empty input: missing dimension line")
    return MonomialIdeal(n, tuple(gens))


def format_ideal(a: MonomialIdeal) -> str:
    lines = [str(a.dim)] + [" ".join(map(str, g)) for g in a.gens]
    return "\n".join(lines) + "\n"
