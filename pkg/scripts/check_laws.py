#!/usr/bin/env python
"""Run the 2-category law suite over named catalog crossed modules.

    python scripts/check_laws.py                      # objects with |M|, |N| <= 4
    python scripts/check_laws.py --objects z2_boundary inclusion_a3_s3 --budget 100
    python scripts/check_laws.py --all --out laws.json
"""

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field

from xmod import catalog as cat
from xmod import harness as hs
from xmod.groups import DEFAULT_BUDGET


@dataclass
class LawRunConfig:
    objects: list[str] = field(default_factory=lambda: list(cat.small_xmods()))
    budget: int = DEFAULT_BUDGET
    out: str | None = None


def parse_args(argv=None) -> LawRunConfig:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--objects", nargs="+", choices=list(cat.catalog_xmods()))
    p.add_argument("--all", action="store_true", help="every catalog object, including S3")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--out", help="write the full report as JSON")
    a = p.parse_args(argv)
    cfg = LawRunConfig(budget=a.budget, out=a.out)
    if a.all:
        cfg.objects = list(cat.catalog_xmods())
    elif a.objects:
        cfg.objects = a.objects
    return cfg


def main(argv=None) -> int:
    cfg = parse_args(argv)
    xm = cat.catalog_xmods()
    t0 = time.perf_counter()
    inst = hs.build_instance({k: xm[k] for k in cfg.objects}, cfg.budget)
    rep = hs.check_all(inst)
    dt = time.perf_counter() - t0

    n_one = sum(len(v) for v in inst.one_cells.values())
    n_two = sum(len(ps) for t in inst.two_cells.values() for ps in t.values())
    print(f"objects {len(inst.objects)}  1-cells {n_one}  2-cells {n_two}  skipped pairs {len(inst.skipped)}")
    print(f"law entries {len(rep.checks)}  instances {sum(c.count or 0 for c in rep.checks)}  "
          f"failures {len(rep.failures())}  ({dt:.1f}s)")
    for c in rep.failures():
        print(f"  FAIL {c.name}: {c.witness}")
    for note in rep.notes:
        print(f"  note: {note['note']} on {note['pair']} morphism #{note['morphism']} ({note['count']})")
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"config": asdict(cfg), **rep.to_dict()}, fh, indent=1)
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
