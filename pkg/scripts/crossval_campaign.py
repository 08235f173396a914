#!/usr/bin/env python3
"""Seeded cross-validation campaign between the two PBW verdicts.

Runs a grid of (n, characteristic) cells, each with a mix of the three
random-parameter profiles, and reports the agreement matrix per cell.
Any disagreement between the five-condition test and the confluence
oracle is an engine bug, not a property of the inputs.

Usage:
    python scripts/crossval_campaign.py [--samples 60] [--seed 0]
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from dhecke import FieldSpec, RewriteSystem, check_pbw, random_params  # noqa: E402

PROFILES = ("general", "mu-family", "perturbed-mu")


def run_cell(n: int, p: int, samples: int, seed: int) -> tuple[int, int, int]:
    fs = FieldSpec(p)
    agree = 0
    pbw_true = 0
    for s in range(samples):
        profile = PROFILES[s % 3]
        lam, kappa = random_params(n, fs, seed=seed + s, profile=profile)
        cond = check_pbw(lam, kappa).pbw
        conf = RewriteSystem(lam, kappa).check_confluence()[0]
        if cond == conf:
            agree += 1
        else:
            print(f"  MISMATCH at n={n} p={p} sample={s} profile={profile}: {cond} vs {conf}")
        pbw_true += cond
    return agree, pbw_true, samples


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=60)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-n", type=int, default=4)
    args = parser.parse_args()

    total_agree = total = 0
    for n in range(3, args.max_n + 1):
        for p in (0, 3, 5, 7):
            t0 = time.perf_counter()
            agree, pbw_true, samples = run_cell(n, p, args.samples, args.seed)
            dt = time.perf_counter() - t0
            total_agree += agree
            total += samples
            print(
                f"n={n} p={p}: {agree}/{samples} agree, {pbw_true} PBW-true  [{dt:.2f}s]"
            )
    print(f"overall: {total_agree}/{total} agree")
    return 0 if total_agree == total else 1


if __name__ == "__main__":
    raise SystemExit(main())
