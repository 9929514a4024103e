"""Contact loci of monomial ideals, modeled through arc weights.

An arc with ``ord(x_i) = w_i`` and generic coefficients has
``ord(x^u) = <w, u>``, hence ``ord(a) = min_{v in gens} <w, v>`` for a monomial
ideal ``a``. Every weight vector is realized by such an arc, so the contact
locus ``Cont^{>=m}(a)`` is described by its admissible weights

    Q_m = {w in Z^n_{>=0} : <w, v> >= m for every generator v},

and ``ord_C(x^u) = min_{w in Q_m} <w, u>``. This minimum is attained on the
antichain of minimal points of ``Q_m``, and in fact on the vertices of its
integer hull, which is all the pseudo-valuation keeps.

Capping: replacing ``w_i`` by ``min(w_i, m)`` keeps ``w`` admissible (a
generator with ``v_i >= 1`` already contributes ``m``) and never increases
``<w, u>`` for ``u >= 0``. So minimal points live in ``[0, m]^n``.

Jet-codimension on smooth ``n``-space is the codimension of the locus, which
for the weight model is ``min_{w in Q_m} sum(w)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, InfiniteVolume
from .monomial import Exponent, MonomialIdeal, axis_ranges, colength, intersect, is_subideal, power
from .newton import build, lct, multiplicity
from .psval import MonomialPseudoValuation, WeightRay, b_ideal, volume_exact

INF = math.inf

# Each constraint is (generators, order): <w, v> >= order for all generators v.
Constraint = tuple[tuple[Exponent, ...], int]


def minimal_weights(constraints: Sequence[Constraint], dim: int) -> list[Exponent]:
    """Minimal lattice points of ``{w >= 0 : <w, v> >= m_k for all (gens_k, m_k)}``.

    Works on the staircase of heights: for each prefix ``w'`` in the capped box,
    the least admissible last coordinate. Memory is ``(M+1)^(n-1)``.
    """
    M = max(m for _, m in constraints)
    if dim == 1:
        need = 0
        for gens, m in constraints:
            need = max(need, min(math.ceil(m / g[0]) if g[0] else INF for g in gens))
        return [] if need == INF else [(int(need),)]
    shape = (M + 1,) * (dim - 1)
    idx = axis_ranges(shape)
    height = np.zeros(shape, dtype=np.int64)
    feasible = np.ones(shape, dtype=bool)
    for gens, m in constraints:
        # ord(a) >= m is a min over generators >= m, i.e. one condition per generator.
        for g in gens:
            s = np.zeros(shape, dtype=np.int64)
            for i in range(dim - 1):
                if g[i]:
                    s = s + g[i] * idx[i]
            if g[-1] > 0:
                need = -((s - m) // g[-1])  # ceil((m - s) / g_n)
                height = np.maximum(height, need)
            else:
                feasible &= s >= m
    height = np.maximum(height, 0)
    big = np.iinfo(np.int64).max
    h = np.where(feasible, height, big)
    mask = feasible.copy()
    for ax in range(dim - 1):
        prev = np.full(shape, big, dtype=np.int64)
        dst = [slice(None)] * (dim - 1)
        src = [slice(None)] * (dim - 1)
        dst[ax] = slice(1, None)
        src[ax] = slice(None, -1)
        prev[tuple(dst)] = h[tuple(src)]
        mask &= prev > h
    pts = np.argwhere(mask)
    return sorted(tuple(int(x) for x in p) + (int(h[tuple(p)]),) for p in pts)


def _hull_rays(points: Sequence[Exponent], dim: int) -> tuple[Exponent, ...]:
    # Vertices of conv(points) + orthant; a linear form with u >= 0 attains
    # its minimum over the weight set at one of them.
    if len(points) <= 2:
        return tuple(points)
    J = MonomialIdeal._trusted(dim, sorted(points))
    return tuple(tuple(int(x) for x in v) for v in build(J).vertices)


def _psval(rays: Sequence[Exponent], dim: int) -> MonomialPseudoValuation:
    return MonomialPseudoValuation(dim, tuple(WeightRay(w, 1) for w in rays))


@dataclass(frozen=True)
class ContactLocusModel:
    """Arcs with ``ord_gamma(ideal) >= order``, through their weight set."""

    ideal: MonomialIdeal
    order: int
    effective_rays: tuple[Exponent, ...]
    hull_rays: tuple[Exponent, ...] = field(repr=False)

    @property
    def dim(self) -> int:
        return self.ideal.dim

    @property
    def primary(self) -> bool:
        return self.ideal.pure_powers is not None

    def admits(self, w: Sequence[int]) -> bool:
        """Whether weight ``w`` lies in the admissible polyhedron."""
        return all(sum(a * b for a, b in zip(w, g)) >= self.order for g in self.ideal.gens)

    def pseudo_valuation(self) -> MonomialPseudoValuation:
        return _psval(self.hull_rays, self.dim)

    def constraint(self) -> Constraint:
        return (self.ideal.gens, self.order)


def build_contact(a: MonomialIdeal, m: int) -> ContactLocusModel:
    """Weight model of ``Cont^{>=m}(a)``.

    Accepts ideals that are not primary to the origin too; their loci have
    infinite volume, which ``volume_contact`` reports.
    """
    if m < 1:
        raise ValueError("contact order must be positive")
    if a.is_zero or a.is_unit:
        raise ValueError("contact loci need a proper nonzero ideal")
    rays = minimal_weights([(a.gens, m)], a.dim)
    return ContactLocusModel(a, m, tuple(rays), _hull_rays(rays, a.dim))


def ord_contact(c: ContactLocusModel, u: Sequence[int]) -> int:
    if len(u) != c.dim:
        raise DimensionMismatch("exponent length differs from ambient dimension")
    return min(sum(a * b for a, b in zip(w, u)) for w in c.hull_rays)


def bp_ideal(c: ContactLocusModel, p: int) -> MonomialIdeal:
    return b_ideal(c.pseudo_valuation(), p)


def _volume_or_inf(v: MonomialPseudoValuation):
    try:
        return volume_exact(v)
    except InfiniteVolume:
        return INF


def volume_contact(c: ContactLocusModel):
    """Exact volume of the contact locus; ``math.inf`` when it is not over a point."""
    return _volume_or_inf(c.pseudo_valuation())


def jet_codim_witness(a: MonomialIdeal, m: int) -> tuple[int, Exponent]:
    """Jet-codimension of ``Cont^{>=m}(a)`` and the lexicographically least minimizing weight."""
    rays = build_contact(a, m).effective_rays
    best = min(sum(w) for w in rays)
    return best, min(w for w in rays if sum(w) == best)


def jet_codim_contact(a: MonomialIdeal, m: int) -> int:
    return jet_codim_witness(a, m)[0]


# --- unions and intersections of contact loci ---------------------------------


@dataclass(frozen=True)
class ArcSetModel:
    """Finite union of intersections of contact loci.

    ``pieces`` lists intersections; each is a tuple of leaves whose weight
    polyhedra are intersected. The admissible weight set is the union over
    pieces.
    """

    dim: int
    pieces: tuple[tuple[ContactLocusModel, ...], ...]

    @classmethod
    def leaf(cls, c: ContactLocusModel) -> "ArcSetModel":
        return cls(c.dim, ((c,),))

    def piece_rays(self, piece: tuple[ContactLocusModel, ...]) -> list[Exponent]:
        return minimal_weights([c.constraint() for c in piece], self.dim)

    @property
    def effective_rays(self) -> tuple[Exponent, ...]:
        pts = set()
        for piece in self.pieces:
            pts.update(self.piece_rays(piece))
        pts = sorted(pts)
        return tuple(p for p in pts if not any(q != p and all(x <= y for x, y in zip(q, p)) for q in pts))

    def pseudo_valuation(self) -> MonomialPseudoValuation:
        rays = self.effective_rays
        return _psval(_hull_rays(rays, self.dim), self.dim)


def _as_set(x) -> ArcSetModel:
    return ArcSetModel.leaf(x) if isinstance(x, ContactLocusModel) else x


def union(A, B) -> ArcSetModel:
    A, B = _as_set(A), _as_set(B)
    if A.dim != B.dim:
        raise DimensionMismatch("arc sets in different dimensions")
    pieces = tuple(dict.fromkeys(A.pieces + B.pieces))
    return ArcSetModel(A.dim, pieces)


def intersection(A, B) -> ArcSetModel:
    A, B = _as_set(A), _as_set(B)
    if A.dim != B.dim:
        raise DimensionMismatch("arc sets in different dimensions")
    pieces = []
    for pa in A.pieces:
        for pb in B.pieces:
            pieces.append(tuple(dict.fromkeys(pa + pb)))
    return ArcSetModel(A.dim, tuple(dict.fromkeys(pieces)))


def bp_ideal_set(s, p: int) -> MonomialIdeal:
    return b_ideal(_as_set(s).pseudo_valuation(), p)


def volume_set(s):
    return _volume_or_inf(_as_set(s).pseudo_valuation())


def colength_or_inf(a: MonomialIdeal):
    return colength(a) if a.pure_powers is not None else INF


@dataclass
class InclusionExclusionCheck:
    volumes: tuple  # (C1, C2, union, intersection)
    volume_ok: bool
    colength_rows: list = field(default_factory=list)  # (p, l1, l2, l_union, l_inter, ok)
    inclusion_ok: bool = True

    @property
    def ok(self) -> bool:
        return self.volume_ok and self.inclusion_ok and all(r[-1] for r in self.colength_rows)


def check_inclusion_exclusion(C1, C2, max_p: int = 12) -> InclusionExclusionCheck:
    """Per-p colength inequality, the b_p inclusions, and the volume inequality."""
    U, I = union(C1, C2), intersection(C1, C2)
    S1, S2 = _as_set(C1), _as_set(C2)
    vols = tuple(volume_set(s) for s in (S1, S2, U, I))
    volume_ok = vols[2] + vols[3] <= vols[0] + vols[1]
    rows = []
    incl_ok = True
    for p in range(1, max_p + 1):
        b1, b2 = bp_ideal_set(S1, p), bp_ideal_set(S2, p)
        bu, bi = bp_ideal_set(U, p), bp_ideal_set(I, p)
        incl_ok &= bu == intersect(b1, b2)
        incl_ok &= is_subideal(b1 + b2, bi)
        l1, l2, lu, li = (colength_or_inf(b) for b in (b1, b2, bu, bi))
        rows.append((p, l1, l2, lu, li, l1 + l2 >= lu + li))
    return InclusionExclusionCheck(vols, volume_ok, rows, incl_ok)


# --- inequality checks-----------------------------------------------------------


@dataclass
class VolContRow:
    m: int
    p: int
    lower: Fraction  # m^n vol(Cont^{>=m})
    upper: Fraction  # (mp)^n vol(Cont^{>=mp})
    chain_ok: bool
    expect_equality: bool
    equality: bool


@dataclass
class VolContReport:
    ideal: MonomialIdeal
    multiplicity: int
    offsets_lcm: int
    rows: list[VolContRow]

    @property
    def violations(self) -> list[VolContRow]:
        return [r for r in self.rows if not r.chain_ok or (r.expect_equality and not r.equality)]

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def equality_orders(self) -> list[int]:
        return sorted({r.m for r in self.rows if r.equality})


def normalized_contact_volume(a: MonomialIdeal, m: int) -> Fraction:
    """``m^n * vol(Cont^{>=m}(a))``."""
    return m ** a.dim * volume_contact(build_contact(a, m))


def verify_vol_cont(a: MonomialIdeal, max_m: int, max_p: int, extra_orders=()) -> VolContReport:
    """Check ``m^n vol(C_m) <= (mp)^n vol(C_mp) <= e(a)`` over a grid of (m, p).

    ``m`` runs over ``1..max_m`` plus ``extra_orders``. Equality of the whole
    chain is expected whenever the lcm of the facet offsets of the Newton
    polyhedron divides ``m``.
    """
    e = multiplicity(a)
    L = build(a).offsets_lcm()
    cache: dict[int, Fraction] = {}

    def nv(k):
        if k not in cache:
            cache[k] = normalized_contact_volume(a, k)
        return cache[k]

    rows = []
    for m in sorted(set(range(1, max_m + 1)) | set(extra_orders)):
        for p in range(1, max_p + 1):
            lo, hi = nv(m), nv(m * p)
            expect = m % L == 0
            rows.append(VolContRow(m, p, lo, hi, lo <= hi <= e, expect, lo == hi == e))
    return VolContReport(a, e, L, rows)


@dataclass
class VolCodimCheck:
    volume: Fraction
    codim: int
    lhs: Fraction  # vol * codim^n
    rhs: int  # n^n

    @property
    def ok(self) -> bool:
        return self.lhs >= self.rhs

    @property
    def margin(self) -> Fraction:
        return self.lhs - self.rhs


def verify_vol_codim(a: MonomialIdeal, m: int) -> VolCodimCheck:
    """Root-free form of ``vol(C)^(1/n) * codim(C) >= n`` for ``C = Cont^{>=m}(a)``."""
    c = build_contact(a, m)
    vol = volume_contact(c)
    codim = min(sum(w) for w in c.effective_rays)
    n = a.dim
    return VolCodimCheck(vol, codim, vol * codim**n, n**n)


@dataclass
class LctJetsRow:
    m: int
    codim: int
    bound: Fraction  # m * lct
    ok: bool
    equality: bool
    expect_equality: bool


def verify_lct_jets(a: MonomialIdeal, max_m: int) -> list[LctJetsRow]:
    """``codim Cont^{>=m}(a) >= m * lct(a)``, with equality when every facet offset divides m."""
    c0 = lct(a)
    offsets = [int(f.offset) for f in build(a).facets]
    rows = []
    for m in range(1, max_m + 1):
        k = jet_codim_contact(a, m)
        bound = m * c0
        expect = all(m % b == 0 for b in offsets)
        rows.append(LctJetsRow(m, k, bound, k >= bound, k == bound, expect))
    return rows


def powers_in_contact_ideals(a: MonomialIdeal, m: int, max_j: int) -> bool:
    """``a^j`` is contained in ``b_{jm}(Cont^{>=m}(a))`` for ``j <= max_j``."""
    c = build_contact(a, m)
    return all(is_subideal(power(a, j), bp_ideal(c, j * m)) for j in range(1, max_j + 1))
