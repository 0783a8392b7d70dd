#!/usr/bin/env python3
"""Differential sweep: the capped decision against explicit-graph liveness
on seeded random conservative nets.  Usage:
    python scripts/agreement_sweep.py [--cases N] [--places P] [--seed S]
"""
import argparse
import pathlib
import random
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from ionet import is_live_exact, is_nonlive  # noqa: E402
from ionet.generate import random_net, random_marking  # noqa: E402


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cases", type=int, default=500)
    ap.add_argument("--places", type=int, default=5)
    ap.add_argument("--tokens", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    mismatches = 0
    t0 = time.time()
    for k in range(args.cases):
        net = random_net("io" if k % 2 else "imo",
                         n_places=2 + k % args.places,
                         n_trans=1 + k % 5, wmax=1,
                         seed=args.seed * 100_000 + k)
        m = random_marking(net, args.tokens, rng)
        capped = is_nonlive(net, m, node_budget=1_000_000)
        exact = is_live_exact(net, m, node_budget=500_000)
        want = "live" if exact else "nonlive"
        if capped.status != want:
            mismatches += 1
            print(f"MISMATCH case={k} marking={m}: capped={capped.status} "
                  f"exact={want}")
    print(f"{args.cases} cases, {mismatches} mismatches, "
          f"{time.time() - t0:.1f}s")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
