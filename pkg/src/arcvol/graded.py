"""Graded sequences of monomial ideals and their volumes.

For a sequence cosupported at the origin that is also nested
(``a_p`` inside ``a_q`` for ``p >= q``), the volume is both

    inf_m n! * l(R/a_m) / m^n    and    inf_m e(a_m) / m^n,

so every sampled row is an upper bound. ``volume`` fills a table of both
normalized columns and pairs it with the closed form whenever the kind of
sequence has one.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .contact import ContactLocusModel, bp_ideal, volume_contact
from .errors import HypothesisViolated, NotPrimary, OutOfRange
from .monomial import MonomialIdeal, colength, is_subideal, product
from .newton import integral_closure_power, multiplicity
from .psval import MonomialPseudoValuation, b_ideal, volume_exact

DEFAULT_MAX_M = 20
MAX_M_CAP = 60


class GradedSequence:
    """Base class; subclasses supply ``_term`` and optionally ``exact_volume``."""

    dim: int
    nested = True

    def __init__(self):
        self._cache: dict[int, MonomialIdeal] = {}

    def term(self, m: int) -> MonomialIdeal:
        if m < 0:
            raise ValueError("index must be non-negative")
        if m == 0:
            return MonomialIdeal.unit(self.dim)
        if m not in self._cache:
            self._cache[m] = self._term(m)
        return self._cache[m]

    def _term(self, m: int) -> MonomialIdeal:
        raise NotImplementedError

    def exact_volume(self) -> Fraction | None:
        return None


class Powers(GradedSequence):
    nested = False

    def __init__(self, ideal: MonomialIdeal):
        super().__init__()
        self.ideal = ideal
        self.dim = ideal.dim

    def _term(self, m):
        prev = self.term(m - 1) if m > 1 else None
        return self.ideal if prev is None else product(prev, self.ideal)

    def exact_volume(self):
        return Fraction(multiplicity(self.ideal))


class ClosurePowers(GradedSequence):
    def __init__(self, ideal: MonomialIdeal):
        super().__init__()
        self.ideal = ideal
        self.dim = ideal.dim

    def _term(self, m):
        return integral_closure_power(self.ideal, m)

    def exact_volume(self):
        return Fraction(multiplicity(self.ideal))


class ValuationIdeals(GradedSequence):
    def __init__(self, v: MonomialPseudoValuation):
        super().__init__()
        self.valuation = v
        self.dim = v.dim

    def _term(self, m):
        return b_ideal(self.valuation, m)

    def exact_volume(self):
        return volume_exact(self.valuation)


class ContactIdeals(GradedSequence):
    def __init__(self, c: ContactLocusModel):
        super().__init__()
        self.contact = c
        self.dim = c.dim

    def _term(self, m):
        return bp_ideal(self.contact, m)

    def exact_volume(self):
        return volume_contact(self.contact)


class Table(GradedSequence):
    """An explicit finite list ``a_1, ..., a_k``."""

    def __init__(self, ideals: Sequence[MonomialIdeal]):
        super().__init__()
        if not ideals:
            raise ValueError("empty table")
        self.ideals = tuple(ideals)
        self.dim = ideals[0].dim

    def _term(self, m):
        if m > len(self.ideals):
            raise OutOfRange(f"table has {len(self.ideals)} terms, asked for {m}")
        return self.ideals[m - 1]

    def __len__(self):
        return len(self.ideals)


def _bound(s: GradedSequence, up_to: int) -> int:
    if up_to < 2:
        raise ValueError("up_to must be at least 2")
    return min(up_to, len(s)) if isinstance(s, Table) else up_to


def check_graded(s: GradedSequence, up_to: int) -> tuple[bool, tuple[int, int] | None]:
    """Check ``a_p * a_q`` inside ``a_{p+q}`` for ``p + q <= up_to``; return the first failing pair."""
    top = _bound(s, up_to)
    for total in range(2, top + 1):
        for p in range(1, total // 2 + 1):
            q = total - p
            if not is_subideal(product(s.term(p), s.term(q)), s.term(total)):
                return False, (p, q)
    return True, None


def check_nested(s: GradedSequence, up_to: int) -> tuple[bool, tuple[int, int] | None]:
    """Check ``a_p`` inside ``a_q`` whenever ``p >= q``; return the first failing pair."""
    top = _bound(s, up_to)
    for p in range(2, top + 1):
        for q in range(1, p):
            if not is_subideal(s.term(p), s.term(q)):
                return False, (p, q)
    return True, None


@dataclass(frozen=True)
class Row:
    m: int
    colength: int
    normalized_colength: Fraction  # n! l / m^n
    normalized_multiplicity: Fraction  # e / m^n


@dataclass
class VolumeEstimate:
    dim: int
    exact: Fraction | None
    rows: list[Row] = field(default_factory=list)

    @property
    def upper_bound(self) -> Fraction:
        return min(min(r.normalized_colength, r.normalized_multiplicity) for r in self.rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m", "colength", "normalized_colength", "normalized_multiplicity"])
        for r in self.rows:
            w.writerow([r.m, r.colength, fraction_str(r.normalized_colength), fraction_str(r.normalized_multiplicity)])
        return buf.getvalue()


def fraction_str(x) -> str:
    if x == math.inf:
        return "inf"
    return str(Fraction(x))


def volume(s: GradedSequence, max_m: int = DEFAULT_MAX_M) -> VolumeEstimate:
    if not 1 <= max_m <= MAX_M_CAP:
        raise ValueError(f"max_m must lie in 1..{MAX_M_CAP}")
    n = s.dim
    rows = []
    for m in range(1, max_m + 1):
        a = s.term(m)
        if a.pure_powers is None:
            raise NotPrimary(f"term {a} is not primary at the origin", index=m)
        ell = colength(a)
        e = multiplicity(a)
        scale = Fraction(1, m**n)
        rows.append(Row(m, ell, math.factorial(n) * ell * scale, e * scale))
    # Closed forms come last so a non-primary term is reported with its index.
    return VolumeEstimate(n, s.exact_volume(), rows)


def fekete_limit(alpha: Sequence) -> Fraction:
    """``lim alpha_m / m`` for a sequence with ``alpha_pq <= p alpha_q`` and ``alpha`` non-decreasing.

    Under those two conditions the limit equals the infimum, so the minimum
    of ``alpha_m / m`` over the given range is reported. ``alpha[0]`` is
    ``alpha_1``.
    """
    vals = [Fraction(x) for x in alpha]
    if not vals:
        raise ValueError("empty sequence")
    if any(x < 0 for x in vals):
        raise ValueError("sequence must be non-negative")
    N = len(vals)
    for q in range(1, N + 1):
        for p in range(1, N // q + 1):
            if vals[p * q - 1] > p * vals[q - 1]:
                raise HypothesisViolated("alpha_pq <= p*alpha_q", (p, q))
    for p in range(2, N + 1):
        if vals[p - 1] < vals[p - 2]:
            raise HypothesisViolated("alpha_p >= alpha_q for p >= q", (p, p - 1))
    return min(x / m for m, x in enumerate(vals, start=1))
