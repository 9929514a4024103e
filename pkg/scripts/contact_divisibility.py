"""Where the contact-locus inequalities become equalities.

For random primary ideals, compares m^n vol(Cont^{>=m}) with e(a) and the
jet-codimension with m lct(a) for m = 1..max_m, and reports the orders where
each is tight next to the lcm of the Newton facet offsets.

    python scripts/contact_divisibility.py --n 2 --count 20 --max-m 24
"""

import argparse
import json
from dataclasses import dataclass

from arcvol.contact import jet_codim_contact, normalized_contact_volume
from arcvol.newton import build, lct, multiplicity
from arcvol.suites import random_corpus


@dataclass
class Config:
    n: int = 2
    count: int = 20
    seed: int = 0
    max_m: int = 24


def survey(cfg: Config) -> list[dict]:
    out = []
    for fid, a in random_corpus(cfg.n, cfg.count, cfg.seed):
        P = build(a)
        e, c = multiplicity(a), lct(a)
        vol_eq, codim_eq = [], []
        for m in range(1, cfg.max_m + 1):
            if normalized_contact_volume(a, m) == e:
                vol_eq.append(m)
            if jet_codim_contact(a, m) == m * c:
                codim_eq.append(m)
        out.append(
            {
                "fixture": fid,
                "ideal": str(a),
                "offsets": sorted({int(f.offset) for f in P.facets}),
                "offsets_lcm": P.offsets_lcm(),
                "volume_equality_orders": vol_eq,
                "codim_equality_orders": codim_eq,
            }
        )
    return out


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=Config.n)
    p.add_argument("--count", type=int, default=Config.count)
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--max-m", type=int, default=Config.max_m)
    a = p.parse_args()
    print(json.dumps(survey(Config(a.n, a.count, a.seed, a.max_m)), indent=2))
