"""Command-line front end.

    arcvol report <file> [--max-m K] [--json|--csv]
    arcvol sequence <file> --kind powers|closure|contact:M [--max-m K]
    arcvol verify (<file> | --random n=N count=C seed=S) --suite <name>

Exit codes: 0 when every check passes, 1 when a mathematical check fails,
2 on bad input. Rationals are printed as ``p/q`` strings, never floats.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys

from .contact import build_contact, jet_codim_contact, volume_contact
from .errors import ArcvolError, NotPrimary, ParseError
from .graded import DEFAULT_MAX_M, MAX_M_CAP, ClosurePowers, ContactIdeals, Powers, fraction_str, volume
from .monomial import MAX_DIM, MonomialIdeal, colength, parse_ideal
from .newton import build, lct, multiplicity
from .suites import SUITE_NAMES, SuiteConfig, random_corpus, run_suites

EXIT_OK, EXIT_CHECK, EXIT_INPUT = 0, 1, 2
SKIPPED = "non-primary: skipped"
REPORT_MAX_M = 12


class InputError(Exception):
    pass


def max_dim() -> int:
    raw = os.environ.get("ARCVOL_MAX_DIM", "4")
    try:
        n = int(raw)
    except ValueError:
        raise InputError(f"ARCVOL_MAX_DIM must be an integer, got {raw!r}") from None
    if not 1 <= n <= MAX_DIM:
        raise InputError(f"ARCVOL_MAX_DIM must lie in 1..{MAX_DIM}")
    return n


def load_ideal(path: str) -> MonomialIdeal:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return parse_ideal(text, max_dim())
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None


def _q(x) -> str:
    return fraction_str(x)


def _check(name: str, lhs, rhs) -> dict:
    return {"name": name, "lhs": _q(lhs), "rhs": _q(rhs), "margin": _q(lhs - rhs), "ok": lhs >= rhs}


# --- report -------------------------------------------------------------------------


def build_report(a: MonomialIdeal, max_m: int) -> dict:
    n = a.dim
    rep: dict = {
        "ideal": {"n": n, "generators": [list(g) for g in a.gens], "text": str(a)},
        "lct": _q(lct(a)),
    }
    proper = not (a.is_zero or a.is_unit)
    rep["facets"] = (
        [{"normal": list(f.normal), "offset": _q(f.offset)} for f in build(a).facets] if proper else []
    )
    if not proper or a.pure_powers is None:
        reason = "unit ideal: skipped" if a.is_unit else SKIPPED
        rep.update(colength=reason, multiplicity=reason, contact=reason, checks=[], ok=True)
        return rep
    c, e, ell = lct(a), multiplicity(a), colength(a)
    L = build(a).offsets_lcm()
    rep.update(colength=ell, multiplicity=e, offsets_lcm=L)
    checks = [
        _check("e*lct^n >= n^n", e * c**n, n**n),
        _check("n!*l*lct^n >= n^n", math.factorial(n) * ell * c**n, n**n),
    ]
    rows = []
    for m in range(1, max_m + 1):
        cm = build_contact(a, m)
        vol = volume_contact(cm)
        codim = jet_codim_contact(a, m)
        normalized = m**n * vol
        vc = _check("vol*codim^n >= n^n", vol * codim**n, n**n)
        vc["m"] = m
        checks.append(vc)
        rows.append(
            {
                "m": m,
                "effective_rays": len(cm.effective_rays),
                "volume": _q(vol),
                "jet_codim": codim,
                "m_lct": _q(m * c),
                "normalized_volume": _q(normalized),
                "chain_ok": normalized <= e,
                "chain_equality": normalized == e,
                "codim_ok": codim >= m * c,
                "codim_equality": codim == m * c,
            }
        )
    rep["contact"] = rows
    rep["checks"] = checks
    rep["ok"] = all(ch["ok"] for ch in checks) and all(r["chain_ok"] and r["codim_ok"] for r in rows)
    return rep


def render_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


CONTACT_COLUMNS = [
    "m",
    "effective_rays",
    "volume",
    "jet_codim",
    "m_lct",
    "normalized_volume",
    "chain_ok",
    "chain_equality",
    "codim_ok",
    "codim_equality",
]


def render_report_csv(rep: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CONTACT_COLUMNS)
    if isinstance(rep["contact"], list):
        for r in rep["contact"]:
            w.writerow([str(r[k]).lower() if isinstance(r[k], bool) else r[k] for k in CONTACT_COLUMNS])
    return buf.getvalue()


def render_report_text(rep: dict) -> str:
    lines = [f"ideal: {rep['ideal']['text']} in n={rep['ideal']['n']}"]
    lines.append(f"colength: {rep['colength']}")
    lines.append(f"multiplicity: {rep['multiplicity']}")
    lines.append(f"lct: {rep['lct']}")
    for f in rep["facets"]:
        lines.append(f"facet: <{', '.join(map(str, f['normal']))}> . u >= {f['offset']}")
    if isinstance(rep["contact"], list):
        lines.append("contact loci:")
        lines.append("  m  rays  vol  codim  m*lct  m^n*vol  chain  codim>=m*lct")
        for r in rep["contact"]:
            lines.append(
                f"  {r['m']}  {r['effective_rays']}  {r['volume']}  {r['jet_codim']}  {r['m_lct']}"
                f"  {r['normalized_volume']}  {'=' if r['chain_equality'] else '<' if r['chain_ok'] else 'FAIL'}"
                f"  {'=' if r['codim_equality'] else '>' if r['codim_ok'] else 'FAIL'}"
            )
    else:
        lines.append(f"contact loci: {rep['contact']}")
    for ch in rep["checks"]:
        at = f" (m={ch['m']})" if "m" in ch else ""
        lines.append(f"check {ch['name']}{at}: {ch['lhs']} vs {ch['rhs']}, margin {ch['margin']}: {'ok' if ch['ok'] else 'FAIL'}")
    lines.append("all checks pass" if rep["ok"] else "SOME CHECKS FAILED")
    return "\n".join(lines) + "\n"


def cmd_report(args) -> int:
    a = load_ideal(args.file)
    rep = build_report(a, args.max_m)
    if args.json:
        out = render_json(rep)
    elif args.csv:
        out = render_report_csv(rep)
    else:
        out = render_report_text(rep)
    sys.stdout.write(out)
    return EXIT_OK if rep["ok"] else EXIT_CHECK


# --- sequence -----------------------------------------------------------------------


def make_sequence(a: MonomialIdeal, kind: str):
    if kind == "powers":
        return Powers(a)
    if kind == "closure":
        return ClosurePowers(a)
    if kind.startswith("contact:"):
        try:
            m = int(kind.split(":", 1)[1])
        except ValueError:
            raise InputError(f"bad contact order in {kind!r}") from None
        if m < 1:
            raise InputError("contact order must be positive")
        return ContactIdeals(build_contact(a, m))
    raise InputError(f"unknown kind {kind!r}; use powers, closure or contact:M")


def cmd_sequence(args) -> int:
    a = load_ideal(args.file)
    if a.is_zero or a.is_unit or a.pure_powers is None:
        raise InputError(f"{a} is not primary at the origin")
    s = make_sequence(a, args.kind)
    try:
        est = volume(s, args.max_m)
    except NotPrimary as exc:
        raise InputError(str(exc)) from None
    sys.stdout.write(est.to_csv())
    sys.stdout.write(f"# exact: {_q(est.exact) if est.exact is not None else 'unknown'}\n")
    sys.stdout.write(f"# upper_bound: {_q(est.upper_bound)}\n")
    if est.exact is None:
        return EXIT_OK
    ok = all(min(r.normalized_colength, r.normalized_multiplicity) >= est.exact for r in est.rows)
    return EXIT_OK if ok else EXIT_CHECK


# --- verify -------------------------------------------------------------------------


def parse_random_spec(tokens) -> tuple[int, int, int]:
    vals = {}
    for tok in tokens:
        key, sep, val = tok.partition("=")
        if not sep or key not in ("n", "count", "seed"):
            raise InputError(f"expected n=N count=C seed=S, got {tok!r}")
        try:
            vals[key] = int(val)
        except ValueError:
            raise InputError(f"{key} must be an integer") from None
    if set(vals) != {"n", "count", "seed"}:
        raise InputError("--random needs n=N count=C seed=S")
    if vals["n"] not in (1, 2, 3) or vals["n"] > max_dim():
        raise InputError("random corpora support n in 1..3")
    if vals["count"] < 1:
        raise InputError("count must be positive")
    return vals["n"], vals["count"], vals["seed"]


def cmd_verify(args) -> int:
    if (args.file is None) == (args.random is None):
        raise InputError("give either a file or --random n=N count=C seed=S")
    if args.file is not None:
        a = load_ideal(args.file)
        if a.is_zero or a.is_unit or a.pure_powers is None:
            raise InputError(f"{a} is not primary at the origin; the suites need primary ideals")
        fixtures = [(os.path.basename(args.file), a)]
        source = {"file": os.path.basename(args.file)}
    else:
        n, count, seed = parse_random_spec(args.random)
        fixtures = random_corpus(n, count, seed)
        source = {"random": {"n": n, "count": count, "seed": seed}}
    results = run_suites(fixtures, [args.suite], SuiteConfig())
    summary = {
        "source": source,
        "fixtures": len(fixtures),
        "suites": {name: r.to_json() for name, r in sorted(results.items())},
        "ok": all(r.ok for r in results.values()),
    }
    sys.stdout.write(render_json(summary))
    return EXIT_OK if summary["ok"] else EXIT_CHECK


# --- entry point --------------------------------------------------------------------


def _max_m(text: str) -> int:
    k = int(text)
    if not 1 <= k <= MAX_M_CAP:
        raise argparse.ArgumentTypeError(f"must lie in 1..{MAX_M_CAP}")
    return k


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_INPUT)


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="arcvol", description="Exact arc-space invariants of monomial ideals.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("report", help="invariants, contact table and inequality checks")
    r.add_argument("file")
    r.add_argument("--max-m", type=_max_m, default=REPORT_MAX_M)
    fmt = r.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    r.set_defaults(func=cmd_report)

    s = sub.add_parser("sequence", help="volume table of a graded sequence")
    s.add_argument("file")
    s.add_argument("--kind", required=True, help="powers, closure or contact:M")
    s.add_argument("--max-m", type=_max_m, default=DEFAULT_MAX_M)
    s.set_defaults(func=cmd_sequence)

    v = sub.add_parser("verify", help="run property suites")
    v.add_argument("file", nargs="?")
    v.add_argument("--random", nargs=3, metavar="KEY=VAL")
    v.add_argument("--suite", default="all", choices=("all",) + SUITE_NAMES)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ArcvolError, ValueError) as exc:
        sys.stderr.write(f"arcvol: error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
