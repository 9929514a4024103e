"""Property suites: every inequality and equality checked as an exact assertion.

A suite runs over a list of fixtures ``(id, ideal)`` and counts checks and
failures. Failures carry their witness values as strings so the summary can
be dumped to JSON verbatim.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .contact import (
    build_contact,
    check_inclusion_exclusion,
    jet_codim_contact,
    verify_lct_jets,
    verify_vol_codim,
    verify_vol_cont,
)
from .errors import HypothesisViolated
from .graded import fekete_limit, fraction_str
from .monomial import MonomialIdeal, colength, power
from .newton import build, lct, multiplicity, radical_valuation
from .psval import scale, volume_exact

Fixture = tuple[str, MonomialIdeal]

SUITE_NAMES = ("lem1", "lem2", "incl-excl", "vol-cont", "vol-codim", "lct-jets", "scaling", "lct-bounds")


@dataclass(frozen=True)
class SuiteConfig:
    lem1_max_p: int = 4
    lem2_max_m: int = 12
    incl_max_p: int = 12
    vol_cont_max_m: int = 12
    vol_cont_max_p: int = 3
    vol_codim_orders: tuple[int, ...] = (1, 2, 3)
    lct_jets_max_m: int = 30
    scaling_alphas: tuple[Fraction, ...] = (Fraction(1, 2), Fraction(2), Fraction(3))
    # Largest weight grid (M+1)^(n-1) spent on the extra order m = lcm of offsets.
    cell_budget: int = 1 << 22


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[dict] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, fixture: str, ok: bool, **witness) -> bool:
        self.checks += 1
        if not ok:
            self.failures.append({"fixture": fixture, **{k: _s(v) for k, v in witness.items()}})
        return ok

    def to_json(self) -> dict:
        out = {
            "checks": self.checks,
            "passed": self.checks - len(self.failures),
            "failed": len(self.failures),
            "failures": self.failures,
        }
        if self.info:
            out["info"] = {k: self.info[k] for k in sorted(self.info)}
        return out


def _s(v):
    if isinstance(v, bool) or isinstance(v, str):
        return v
    if isinstance(v, (int, Fraction, float)):
        return fraction_str(v)
    if isinstance(v, (list, tuple)):
        return [_s(x) for x in v]
    return str(v)


def random_ideal(n: int, rng: random.Random) -> MonomialIdeal:
    """Pure powers ``x_i^{d_i}`` with ``d_i`` in [1, 8] plus up to 4 extra generators."""
    d = [rng.randint(1, 8) for _ in range(n)]
    gens = [tuple(d[i] if j == i else 0 for j in range(n)) for i in range(n)]
    for _ in range(rng.randint(0, 4)):
        g = tuple(rng.randint(0, d[i]) for i in range(n))
        if any(g):
            gens.append(g)
    return MonomialIdeal(n, tuple(gens))


def random_corpus(n: int, count: int, seed: int) -> list[Fixture]:
    rng = random.Random(seed)
    return [(f"n{n}-s{seed}-{k:03d}", random_ideal(n, rng)) for k in range(count)]


def _affordable(order: int, n: int, budget: int) -> bool:
    return (order + 1) ** max(n - 1, 0) <= budget


# --- individual suites ---------------------------------------------------------------


def suite_lem1(fixtures, cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("lem1")
    for fid, a in fixtures:
        ell = colength(a)
        for p in range(1, cfg.lem1_max_p + 1):
            ellp = colength(power(a, p))
            res.check(fid, ell * p**a.dim >= ellp, p=p, colength=ell, colength_power=ellp)
    return res


def suite_lem2(fixtures, cfg: SuiteConfig) -> SuiteResult:
    """Fekete limit of ``m -> jet_codim(Cont^{>=m})`` against the lct."""
    res = SuiteResult("lem2")
    for fid, a in fixtures:
        alpha = [jet_codim_contact(a, m) for m in range(1, cfg.lem2_max_m + 1)]
        c = lct(a)
        try:
            lim = fekete_limit(alpha)
        except HypothesisViolated as exc:
            res.check(fid, False, hypothesis=exc.condition, witness=list(exc.witness))
            continue
        res.check(fid, lim >= c, limit=lim, lct=c)
        # The bound is attained at m = b_j for any facet computing the lct.
        P = build(a)
        attain = min(int(f.offset) for f in P.facets if Fraction(sum(f.normal)) / f.offset == c)
        if attain <= cfg.lem2_max_m:
            res.check(fid, lim == c, limit=lim, lct=c, attained_at=attain)
    return res


def _shift(a: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(a.dim, tuple(g[1:] + g[:1] for g in a.gens))


def inclusion_pairs(fixtures):
    pairs = []
    for k, (fid, a) in enumerate(fixtures):
        pairs.append((f"{fid}:2|3", build_contact(a, 2), build_contact(a, 3)))
        if a.dim > 1:
            pairs.append((f"{fid}:2|shift2", build_contact(a, 2), build_contact(_shift(a), 2)))
        nxt = fixtures[(k + 1) % len(fixtures)]
        if nxt[0] != fid and nxt[1].dim == a.dim:
            pairs.append((f"{fid}:2|{nxt[0]}:3", build_contact(a, 2), build_contact(nxt[1], 3)))
    return pairs


def suite_incl_excl(fixtures, cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("incl-excl")
    for pid, C1, C2 in inclusion_pairs(fixtures):
        chk = check_inclusion_exclusion(C1, C2, cfg.incl_max_p)
        v1, v2, vu, vi = chk.volumes
        res.check(pid, chk.volume_ok, what="volume", vol1=v1, vol2=v2, vol_union=vu, vol_inter=vi)
        res.check(pid, chk.inclusion_ok, what="b_p inclusions")
        for p, l1, l2, lu, li, ok in chk.colength_rows:
            res.check(pid, ok, what="colength", p=p, l1=l1, l2=l2, l_union=lu, l_inter=li)
    return res


def suite_vol_cont(fixtures, cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("vol-cont")
    for fid, a in fixtures:
        L = build(a).offsets_lcm()
        extra = [L] if _affordable(L * cfg.vol_cont_max_p, a.dim, cfg.cell_budget) else []
        rep = verify_vol_cont(a, cfg.vol_cont_max_m, cfg.vol_cont_max_p, extra)
        for r in rep.rows:
            res.check(
                fid,
                r.chain_ok and (r.equality or not r.expect_equality),
                m=r.m,
                p=r.p,
                lower=r.lower,
                upper=r.upper,
                multiplicity=rep.multiplicity,
                expect_equality=r.expect_equality,
            )
            # Normalized volumes are m^n vol, so vol <= 1 reads lower <= m^n.
            res.check(fid, r.lower <= r.m**a.dim, what="vol <= 1", m=r.m, normalized=r.lower)
        res.info[fid] = {"offsets_lcm": L, "equality_orders": rep.equality_orders}
    return res


def suite_vol_codim(fixtures, cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("vol-codim")
    for fid, a in fixtures:
        L = build(a).offsets_lcm()
        orders = set(cfg.vol_codim_orders)
        if _affordable(L, a.dim, cfg.cell_budget):
            orders.add(L)
        rows = []
        for m in sorted(orders):
            chk = verify_vol_codim(a, m)
            res.check(fid, chk.ok, m=m, volume=chk.volume, codim=chk.codim, lhs=chk.lhs, rhs=chk.rhs)
            res.check(fid, chk.volume <= 1, what="vol <= 1", m=m, volume=chk.volume)
            rows.append({"m": m, "lhs": fraction_str(chk.lhs), "rhs": chk.rhs, "tight": chk.lhs == chk.rhs})
        res.info[fid] = rows
    return res


def suite_lct_jets(fixtures, cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("lct-jets")
    for fid, a in fixtures:
        rows = verify_lct_jets(a, cfg.lct_jets_max_m)
        for r in rows:
            res.check(
                fid,
                r.ok and (r.equality or not r.expect_equality),
                m=r.m,
                codim=r.codim,
                bound=r.bound,
                expect_equality=r.expect_equality,
            )
        res.info[fid] = {"equality_orders": [r.m for r in rows if r.equality]}
    return res


def suite_scaling(fixtures, cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("scaling")
    for fid, a in fixtures:
        v = radical_valuation(a)
        vol = volume_exact(v)
        res.check(fid, vol == multiplicity(a), what="vol(radical) = e", volume=vol, multiplicity=multiplicity(a))
        for alpha in cfg.scaling_alphas:
            scaled = volume_exact(scale(v, alpha))
            res.check(fid, scaled * alpha**a.dim == vol, alpha=alpha, scaled=scaled, volume=vol)
    return res


def suite_lct_bounds(fixtures, cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("lct-bounds")
    for fid, a in fixtures:
        n = a.dim
        c, e, ell = lct(a), multiplicity(a), colength(a)
        res.check(fid, e * c**n >= n**n, what="e*lct^n >= n^n", lhs=e * c**n, rhs=n**n)
        lhs = math.factorial(n) * ell * c**n
        res.check(fid, lhs >= n**n, what="n!*l*lct^n >= n^n", lhs=lhs, rhs=n**n)
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "lem1": suite_lem1,
    "lem2": suite_lem2,
    "incl-excl": suite_incl_excl,
    "vol-cont": suite_vol_cont,
    "vol-codim": suite_vol_codim,
    "lct-jets": suite_lct_jets,
    "scaling": suite_scaling,
    "lct-bounds": suite_lct_bounds,
}


def run_suites(fixtures: list[Fixture], names, cfg: SuiteConfig | None = None) -> dict[str, SuiteResult]:
    cfg = cfg or SuiteConfig()
    fixtures = sorted(fixtures, key=lambda f: f[0])
    if names == "all" or names == ["all"]:
        names = SUITE_NAMES
    return {name: SUITES[name](fixtures, cfg) for name in names}
