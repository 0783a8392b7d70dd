"""Command line surface.

Exit codes: 0 decided, 2 invalid input, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__
from .classify import classify
from .generate import random_net
from .lba import parse_lba, simulate_lba, build_stage, reduction_correctness_check, STAGES
from .liveness import BudgetExceeded, check_witness, find_witness
from .nets import NetError, parse_net, serialize_net
from .ordinarize import ordinarize, embed_marking
from .slp import (
    CandidateBudgetExceeded, bounds_for, decide_slp, is_nonlive, truncate,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BUDGET = 3


def _default_budget():
    raw = os.environ.get("IONET_BUDGET")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return 500_000


def _load_net(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_net(fh.read())
    except OSError as exc:
        raise NetError(f"cannot read {path}: {exc}") from exc


def _parse_marking(net, text):
    parts = [p for p in text.replace(",", " ").split() if p]
    try:
        marking = tuple(int(p) for p in parts)
    except ValueError:
        raise NetError(f"bad marking {text!r}") from None
    net.check_marking(marking)
    return marking


def _pick_marking(net, stored, args):
    if getattr(args, "marking", None):
        return _parse_marking(net, args.marking)
    if stored is not None:
        return stored
    raise NetError("no marking: none stored in the file and none passed via --marking")


def _emit(args, payload, text_lines):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _witness_payload(net, witness):
    data = witness.to_dict()
    variant = "ordinary" if classify(net).ordinary else "weighted"
    report = check_witness(net, witness, variant=variant)
    data["conditions"] = report.to_dict()
    return data


def cmd_classify(args):
    net, marking = _load_net(args.file)
    nc = classify(net)
    payload = {
        "name": net.name, "places": len(net.places), "transitions": len(net.transitions),
        "ordinary": nc.ordinary, "conservative": nc.conservative, "bimo": nc.bimo,
        "bio": nc.bio, "imo": nc.imo, "io": nc.io, "max_weight": nc.max_weight,
        "finest": nc.finest(),
    }
    flags = " ".join(k for k in ("ordinary", "conservative", "bimo", "bio", "imo", "io")
                     if payload[k])
    _emit(args, payload, [
        f"net {net.name}: |P|={payload['places']} |T|={payload['transitions']} "
        f"w={nc.max_weight}",
        f"class: {nc.finest()} ({flags or 'none'})",
    ])
    return EXIT_OK


def _verdict_exit(status):
    return EXIT_BUDGET if status == "budget_exceeded" else EXIT_OK


def cmd_live(args):
    net, stored = _load_net(args.file)
    marking = _pick_marking(net, stored, args)
    t0 = time.monotonic()
    verdict = is_nonlive(net, marking, node_budget=args.budget,
                         subset_cap=args.subset_cap)
    wall = (time.monotonic() - t0) * 1000.0
    payload = {"verdict": verdict.status,
               "stats": {"configs_explored": verdict.configs_explored,
                         "wall_ms": wall}}
    lines = [f"marking {','.join(map(str, marking))}: {verdict.status}"]
    if verdict.witness is not None:
        payload["witness"] = _witness_payload(net, verdict.witness)
        lines.append(f"  crucial places: {' '.join(verdict.witness.p_cruc) or '-'}")
        lines.append(f"  dead: {' '.join(verdict.witness.t_dead)}")
    _emit(args, payload, lines)
    return _verdict_exit(verdict.status)


def cmd_slp(args):
    net, _ = _load_net(args.file)
    t0 = time.monotonic()
    try:
        verdict = decide_slp(net, candidate_budget=args.candidates,
                             node_budget=args.budget, subset_cap=args.subset_cap)
    except CandidateBudgetExceeded as exc:
        _emit(args, {"verdict": "budget_exceeded",
                     "stats": {"candidates_tested": exc.tested, "wall_ms": 0.0}},
              [f"budget exceeded: {exc}"])
        return EXIT_BUDGET
    wall = (time.monotonic() - t0) * 1000.0
    payload = verdict.to_dict()
    payload["stats"]["wall_ms"] = wall
    lines = [f"{net.name}: {verdict.status} "
             f"({verdict.candidates_tested} candidates)"]
    if verdict.certificate is not None:
        lines.append(f"  live marking: {','.join(map(str, verdict.certificate))}")
    _emit(args, payload, lines)
    return _verdict_exit(verdict.status)


def cmd_witness(args):
    net, stored = _load_net(args.file)
    marking = _pick_marking(net, stored, args)
    witness = find_witness(net, marking, subset_cap=args.subset_cap)
    if witness is None:
        _emit(args, {"witness": None}, ["no witness at this marking"])
        return EXIT_OK
    payload = {"witness": _witness_payload(net, witness)}
    _emit(args, payload, [
        f"crucial places: {' '.join(witness.p_cruc) or '-'}",
        f"dead: {' '.join(witness.t_dead)}",
    ])
    return EXIT_OK


def cmd_truncate(args):
    net, stored = _load_net(args.file)
    marking = _pick_marking(net, stored, args)
    out = truncate(net, marking)
    _emit(args, {"marking": list(out)}, [",".join(map(str, out))])
    return EXIT_OK


def cmd_ordinarize(args):
    net, stored = _load_net(args.file)
    ordn, omap = ordinarize(net)
    marking = embed_marking(omap, stored) if stored is not None else None
    text = serialize_net(ordn, marking)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_lba(args):
    with open(args.specfile, "r", encoding="utf-8") as fh:
        spec = parse_lba(fh.read())
    net, marking = build_stage(spec, args.word, args.stage,
                               include_idle_moves=args.idle_moves)
    text = serialize_net(net, marking)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_check_reduction(args):
    with open(args.specfile, "r", encoding="utf-8") as fh:
        spec = parse_lba(fh.read())
    report = reduction_correctness_check(
        spec, args.word, node_budget=args.budget,
        candidate_budget=args.candidates, check_slp=not args.skip_slp)
    sim = simulate_lba(spec, args.word)
    payload = report.to_dict()
    payload["word"] = args.word
    _emit(args, payload, [
        f"word {args.word!r}: machine={sim} marked-net="
        f"{'live' if report.marked_live else 'nonlive'} slp={report.slp_status}",
        f"agree: {report.agree}",
    ])
    if report.slp_status == "budget_exceeded":
        return EXIT_BUDGET
    return EXIT_OK


def cmd_gen(args):
    net = random_net(cls=args.cls, n_places=args.places, n_trans=args.trans,
                     wmax=args.wmax, seed=args.seed)
    text = serialize_net(net)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bounds(args):
    net, _ = _load_net(args.file)
    nc = classify(net)
    b = bounds_for(nc, len(net.places), nc.max_weight)
    _emit(args, {"class": nc.finest(), "first": b.first, "second": b.second},
          [f"{nc.finest()}: live-marking bound {b.first}, truncation bound {b.second}"])
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=_default_budget(),
                        help="exploration budget in states (env IONET_BUDGET)")
    common.add_argument("--candidates", type=int, default=200_000,
                        help="candidate-marking budget for structural liveness")
    common.add_argument("--subset-cap", type=int, default=16, dest="subset_cap",
                        help="max |P| for witness subset enumeration")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="write output to a file instead of stdout")

    parser = argparse.ArgumentParser(prog="ionet", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="net class flags")
    p.add_argument("file")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("live", parents=[common], help="decide liveness of a marking")
    p.add_argument("file")
    p.add_argument("--marking", help="comma-separated counts, else the stored marking")
    p.set_defaults(fn=cmd_live)

    p = sub.add_parser("slp", parents=[common], help="decide structural liveness")
    p.add_argument("file")
    p.set_defaults(fn=cmd_slp)

    p = sub.add_parser("witness", parents=[common], help="search a non-liveness witness")
    p.add_argument("file")
    p.add_argument("--marking")
    p.set_defaults(fn=cmd_witness)

    p = sub.add_parser("truncate", parents=[common], help="cap a marking at 2*w*|P|")
    p.add_argument("file")
    p.add_argument("--marking")
    p.set_defaults(fn=cmd_truncate)

    p = sub.add_parser("bounds", parents=[common], help="per-class token bounds")
    p.add_argument("file")
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("ordinarize", parents=[common],
                       help="rewrite a weighted net into an ordinary one")
    p.add_argument("file")
    p.set_defaults(fn=cmd_ordinarize)

    p = sub.add_parser("lba", parents=[common], help="compile a machine and word")
    p.add_argument("specfile")
    p.add_argument("word")
    p.add_argument("--stage", choices=STAGES, default="Nbar")
    p.add_argument("--idle-moves", action="store_true", dest="idle_moves",
                   help="keep move transitions that rewrite a symbol to itself")
    p.set_defaults(fn=cmd_lba)

    p = sub.add_parser("check-reduction", parents=[common],
                       help="acceptance vs liveness vs structural liveness")
    p.add_argument("specfile")
    p.add_argument("word")
    p.add_argument("--skip-slp", action="store_true")
    p.set_defaults(fn=cmd_check_reduction)

    p = sub.add_parser("gen", parents=[common], help="draw a seeded random net")
    p.add_argument("--class", dest="cls", default="io",
                   choices=("io", "imo", "bio", "bimo"))
    p.add_argument("--places", type=int, default=4)
    p.add_argument("--trans", type=int, default=4)
    p.add_argument("--wmax", type=int, default=1)
    p.set_defaults(fn=cmd_gen)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except NetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
