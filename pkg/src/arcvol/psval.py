"""Monomial pseudo-valuations: finite minima of scaled weighted orders.

A ray ``(w, alpha)`` evaluates ``x^u`` to ``alpha * <w, u>`` where entries of
``w`` may be ``math.inf`` (an arc lying inside a coordinate hyperplane), with
``inf * 0 = 0``. A pseudo-valuation is the minimum over finitely many rays.
On monomials this is superadditive and homogeneous, so every such function
is a radical pseudo-valuation; on a polynomial with support ``S`` it is taken
as the minimum over ``S`` (generic coefficients, no cancellation).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, InfiniteVolume, ParseError
from .monomial import MAX_DIM, Exponent, MonomialIdeal, axis_ranges, grid_minimal_points, power
from .polyhedra import covolume

INF = math.inf


def _entry(x):
    if x == INF:
        return INF
    x = int(x)
    if x < 0:
        raise ValueError("weights must be non-negative")
    return x


@dataclass(frozen=True)
class WeightRay:
    w: tuple
    scale: Fraction = Fraction(1)

    def __post_init__(self):
        w = tuple(_entry(x) for x in self.w)
        if not any(w):
            raise ValueError("a weight ray needs a nonzero entry")
        scale = Fraction(self.scale)
        if scale <= 0:
            raise ValueError("ray scale must be positive")
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "scale", scale)

    @property
    def finite(self) -> bool:
        return all(x != INF for x in self.w)

    def value(self, u: Sequence[int]):
        total = 0
        for wi, ui in zip(self.w, u):
            if ui:
                if wi == INF:
                    return INF
                total += wi * ui
        return self.scale * total

    def scaled_weights(self) -> tuple:
        return tuple(INF if x == INF else self.scale * x for x in self.w)


def _dominates(r: WeightRay, s: WeightRay) -> bool:
    # r >= s on every monomial, read off componentwise on alpha * w.
    return all(a >= b for a, b in zip(r.scaled_weights(), s.scaled_weights()))


def _prune(rays: Iterable[WeightRay]) -> tuple[WeightRay, ...]:
    uniq: dict[tuple, WeightRay] = {}
    for r in rays:
        uniq.setdefault(r.scaled_weights(), r)
    rays = sorted(uniq.values(), key=lambda r: (r.scaled_weights(), r.w))
    keep = [r for r in rays if not any(s is not r and _dominates(r, s) for s in rays)]
    return tuple(keep)


@dataclass(frozen=True)
class MonomialPseudoValuation:
    """Pointwise minimum of finitely many weight rays.

    Rays whose scaled weights dominate another ray's componentwise are
    dropped on construction; the value function is unchanged.
    """

    dim: int
    rays: tuple[WeightRay, ...]

    def __post_init__(self):
        if not 1 <= self.dim <= MAX_DIM:
            raise ValueError(f"dimension must be in 1..{MAX_DIM}")
        rays = tuple(self.rays)
        if not rays:
            raise ValueError("need at least one ray")
        for r in rays:
            if len(r.w) != self.dim:
                raise DimensionMismatch(f"ray {r.w} does not have length {self.dim}")
        object.__setattr__(self, "rays", _prune(rays))

    def __call__(self, u: Sequence[int]):
        return evaluate(self, u)

    @property
    def center_is_origin(self) -> bool:
        """True iff every variable has positive value, i.e. the center is the origin."""
        return all(all(r.w[i] != 0 for r in self.rays) for i in range(self.dim))


def evaluate(v: MonomialPseudoValuation, u: Sequence[int]):
    if len(u) != v.dim:
        raise DimensionMismatch(f"exponent of length {len(u)} for dimension {v.dim}")
    return min(r.value(u) for r in v.rays)


def evaluate_support(v: MonomialPseudoValuation, support: Iterable[Sequence[int]]):
    """Value on a polynomial with the given support (generic coefficients)."""
    vals = [evaluate(v, u) for u in support]
    return min(vals) if vals else INF


def evaluate_ideal(v: MonomialPseudoValuation, a: MonomialIdeal):
    """``v(a)``, the minimum over generators (infinite for the zero ideal)."""
    return evaluate_support(v, a.gens)


def _axis_bounds(v: MonomialPseudoValuation, m: int) -> list[int]:
    # A minimal generator u of {v >= m} has u_i <= ceil(m / (alpha_j w_ji))
    # for some ray with finite positive w_ji, or u_i <= 1 via an infinite entry.
    bounds = []
    for i in range(v.dim):
        b = 1
        for r in v.rays:
            wi = r.w[i]
            if wi != INF and wi > 0:
                b = max(b, math.ceil(Fraction(m) / (r.scale * wi)))
        bounds.append(b)
    return bounds


def b_ideal(v: MonomialPseudoValuation, m: int) -> MonomialIdeal:
    """The monomial ideal ``{u : v(u) >= m}``.

    Found by enumerating the box that provably contains every minimal
    generator. The result may fail to be primary when some variable has
    value zero; colength and volume report that downstream.
    """
    if m < 1:
        raise ValueError("m must be positive")
    shape = tuple(b + 1 for b in _axis_bounds(v, m))
    axes = axis_ranges(shape)
    member = np.ones(shape, dtype=bool)
    for r in v.rays:
        lin = np.zeros(shape, dtype=np.int64)
        for i, x in enumerate(r.w):
            if x != INF and x:
                lin = lin + x * axes[i]
        ok = lin * r.scale.numerator >= m * r.scale.denominator
        for i, x in enumerate(r.w):
            if x == INF:
                ok = ok | (axes[i] > 0)
        member &= ok
    return MonomialIdeal._trusted(v.dim, grid_minimal_points(member))


def volume_exact(v: MonomialPseudoValuation) -> Fraction:
    """``n! * vol{u >= 0 : v(u) < 1}``, the volume of ``v``.

    Rays with an infinite entry only contribute a measure-zero piece. With no
    finite ray the set of arcs is thin and the volume is 0.
    """
    if not v.center_is_origin:
        raise InfiniteVolume("center of the pseudo-valuation is not the origin")
    finite = [r for r in v.rays if r.finite]
    if not finite:
        return Fraction(0)
    hs = [(r.w, 1 / r.scale) for r in finite]
    return math.factorial(v.dim) * covolume(hs, v.dim)


def scale(v: MonomialPseudoValuation, alpha) -> MonomialPseudoValuation:
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError("scale factor must be positive")
    return MonomialPseudoValuation(v.dim, tuple(WeightRay(r.w, r.scale * alpha) for r in v.rays))


def combine_min(v: MonomialPseudoValuation, w: MonomialPseudoValuation) -> MonomialPseudoValuation:
    if v.dim != w.dim:
        raise DimensionMismatch("pseudo-valuations in different dimensions")
    return MonomialPseudoValuation(v.dim, v.rays + w.rays)


def single_ray(w: Sequence, alpha=1) -> MonomialPseudoValuation:
    return MonomialPseudoValuation(len(w), (WeightRay(tuple(w), Fraction(alpha)),))


@dataclass(frozen=True)
class IdealAdicValuation:
    """``v_I(x^u) = max{k : x^u in I^k}``, whose ideals ``b_m`` are the powers ``I^m``."""

    ideal: MonomialIdeal

    def __post_init__(self):
        if self.ideal.is_zero or self.ideal.is_unit:
            raise ValueError("the ideal must be proper and nonzero")

    def b_ideal(self, m: int) -> MonomialIdeal:
        return power(self.ideal, m)

    def __call__(self, u: Exponent) -> int:
        if not self.ideal.contains(u):
            return 0
        # Every generator has positive degree, so k <= deg(u) / min degree.
        top = sum(u) // min(sum(g) for g in self.ideal.gens)
        k = 1
        while k < top and power(self.ideal, k + 1).contains(u):
            k += 1
        return k


def ideal_adic_valuation(a: MonomialIdeal) -> Callable[[int], MonomialIdeal]:
    return IdealAdicValuation(a).b_ideal


def parse_rays(text: str) -> MonomialPseudoValuation:
    """Read the ray-system format: ``n`` then lines of n weights (int or ``inf``) and a scale ``p/q``."""
    n = None
    rays = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            try:
                n = int(fields[0])
            except ValueError:
                raise ParseError("first line must be the dimension", lineno) from None
            if len(fields) != 1 or not 1 <= n <= MAX_DIM:
                raise ParseError("bad dimension line", lineno)
            continue
        if len(fields) != n + 1:
            raise ParseError(f"expected {n} weights and a scale", lineno)
        try:
            w = tuple(INF if f == "inf" else int(f) for f in fields[:n])
            alpha = Fraction(fields[n])
            rays.append(WeightRay(w, alpha))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(str(exc), lineno) from None
    if n is None or not rays:
        raise ParseError("need a dimension line and at least one ray")
    return MonomialPseudoValuation(n, tuple(rays))


def format_rays(v: MonomialPseudoValuation) -> str:
    lines = [str(v.dim)]
    for r in v.rays:
        lines.append(" ".join("inf" if x == INF else str(x) for x in r.w) + f" {r.scale}")
    return "\n".join(lines) + "\n"
