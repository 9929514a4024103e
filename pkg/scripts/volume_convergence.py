"""How fast n! l(R/a_m) / m^n approaches e(a) for powers and their closures.

Prints one CSV row per (ideal, kind, m) with the relative gap of the colength
column to the exact volume.

    python scripts/volume_convergence.py --n 3 --count 10 --seed 1 --max-m 20
"""

import argparse
import csv
import sys
from dataclasses import dataclass

from arcvol.graded import ClosurePowers, Powers, fraction_str, volume
from arcvol.suites import random_corpus


@dataclass
class Config:
    n: int = 2
    count: int = 10
    seed: int = 0
    max_m: int = 20


def main(cfg: Config) -> None:
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["ideal", "kind", "m", "normalized_colength", "exact", "relative_gap"])
    for fid, a in random_corpus(cfg.n, cfg.count, cfg.seed):
        for kind in (Powers, ClosurePowers):
            est = volume(kind(a), cfg.max_m)
            for r in est.rows:
                gap = (r.normalized_colength - est.exact) / est.exact
                w.writerow([str(a), kind.__name__, r.m, fraction_str(r.normalized_colength), fraction_str(est.exact), f"{float(gap):.4f}"])


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=Config.n)
    p.add_argument("--count", type=int, default=Config.count)
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--max-m", type=int, default=Config.max_m)
    a = p.parse_args()
    main(Config(a.n, a.count, a.seed, a.max_m))
