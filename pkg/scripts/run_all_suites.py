"""Run every property suite on seeded random corpora in n = 1, 2, 3.

    python scripts/run_all_suites.py --count 50 --seed 7
"""

import argparse
import json
import sys
import time

from arcvol.suites import SuiteConfig, random_corpus, run_suites


def main(count: int, seed: int) -> int:
    summary = {}
    ok = True
    for n in (1, 2, 3):
        t0 = time.perf_counter()
        res = run_suites(random_corpus(n, count, seed), "all", SuiteConfig())
        summary[f"n={n}"] = {
            name: {"checks": r.checks, "failed": len(r.failures)} for name, r in sorted(res.items())
        }
        summary[f"n={n}"]["seconds"] = round(time.perf_counter() - t0, 2)
        ok &= all(r.ok for r in res.values())
    print(json.dumps(summary, indent=2))
    return 0 if ok else 1


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--seed", type=int, default=7)
    a = p.parse_args()
    sys.exit(main(a.count, a.seed))
