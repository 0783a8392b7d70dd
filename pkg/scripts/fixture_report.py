#!/usr/bin/env python3
"""Print class flags, bounds and structural-liveness verdicts for every
fixture net.  Usage: python scripts/fixture_report.py [--budget N]"""
import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from ionet import bounds_for, classify, decide_slp, parse_net  # noqa: E402

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--budget", type=int, default=2_000_000)
    ap.add_argument("--candidates", type=int, default=5_000)
    args = ap.parse_args()
    for path in sorted(FIXTURES.glob("*.net")):
        net, marking = parse_net(path.read_text())
        nc = classify(net)
        b = bounds_for(nc, len(net.places), nc.max_weight)
        t0 = time.time()
        verdict = decide_slp(net, candidate_budget=args.candidates,
                             node_budget=args.budget)
        dt = time.time() - t0
        cert = ""
        if verdict.certificate is not None:
            cert = " cert=" + ",".join(map(str, verdict.certificate))
        print(f"{path.name:28} {nc.finest():9} |P|={len(net.places):3} "
              f"|T|={len(net.transitions):3} bounds=({b.first},{b.second}) "
              f"{verdict.status}{cert}  [{dt:.1f}s]")


if __name__ == "__main__":
    main()
