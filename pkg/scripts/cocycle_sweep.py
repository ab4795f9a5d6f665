#!/usr/bin/env python
"""Compare the scalar cocycle identities with the matrix coherence checks on
random tables.  Prints agreement counts per grading group."""

import argparse
import sys
from dataclasses import dataclass

import numpy as np

from xmod import graded as gr


@dataclass
class SweepConfig:
    factors: tuple[int, ...] = (2,)
    modulus: int = 4
    samples: int = 200
    seed: int = 0
    valid_fraction: float = 0.5


def sample(cfg: SweepConfig, rng) -> gr.AbelianThreeCocycle:
    G = gr.GradingGroup(cfg.factors)
    n, m = G.order, cfg.modulus
    k = rng.integers(0, m, (n, n))
    k[0, :] = k[:, 0] = 0
    if rng.random() < cfg.valid_fraction:
        return gr.gauge_transform(gr.make_cocycle(cfg.factors, m), k)
    f = rng.integers(0, m, (n, n, n))
    f[0, :, :] = f[:, 0, :] = f[:, :, 0] = 0
    return gr.make_cocycle(cfg.factors, m, f, k)


def run(cfg: SweepConfig) -> tuple[int, int, int]:
    rng = np.random.default_rng(cfg.seed)
    agree = valid = 0
    for _ in range(cfg.samples):
        data = sample(cfg, rng)
        st = {c.name: c.status == "pass" for c in gr.verify_cocycle(data).checks}
        h1, h2 = gr.all_simple_hexagons(data)
        same = (st["3-cocycle"] == gr.all_simple_pentagons(data).ok
                and st["hexagon 1"] == h1.ok and st["hexagon 2"] == h2.ok)
        agree += same
        valid += all(st.values())
    return agree, valid, cfg.samples


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    a = p.parse_args(argv)
    bad = 0
    for factors, m in [((2,), 4), ((3,), 3), ((4,), 8), ((2, 2), 4)]:
        cfg = SweepConfig(factors, m, a.samples, a.seed)
        agree, valid, n = run(cfg)
        bad += agree != n
        label = "x".join(f"Z{v}" for v in factors)
        print(f"{label:6} m={m:<2} agreement {agree}/{n}  valid {valid}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
