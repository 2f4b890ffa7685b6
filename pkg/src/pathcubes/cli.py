"""Command-line entry point.

Exit codes: 0 ok, 1 verification counterexample, 2 usage, 3 capacity, 4 output I/O.
"""
from __future__ import annotations

import argparse
import sys

from . import counting as c
from .counting import PathPower
from .errors import CapacityError
from .export import FORMATS
from .hasse import build_hasse, edge_count
from .verification import MAX_N, verify

EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_IO = 4


def _nonneg(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def _positive(text):
    value = _nonneg(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1: {value}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pathcubes",
        description="Independent subsets of path powers and their Hasse diagrams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cnt = sub.add_parser("count", help="number of independent subsets (of size k if given)")
    cnt.add_argument("--n", type=_nonneg, required=True)
    cnt.add_argument("--h", type=_nonneg, required=True)
    cnt.add_argument("--k", type=_nonneg)

    edg = sub.add_parser("edges", help="number of Hasse diagram edges")
    edg.add_argument("--n", type=_nonneg, required=True)
    edg.add_argument("--h", type=_nonneg, required=True)
    edg.add_argument("--method", choices=["closed", "convolution", "graph"], default="closed")

    seq = sub.add_parser("sequence", help="print a sequence for fixed h, one term per line")
    seq.add_argument("--h", type=_nonneg, required=True)
    seq.add_argument("--limit", type=_positive, required=True)
    seq.add_argument("--kind", choices=["p", "fib", "edges"], default="p")

    gr = sub.add_parser("graph", help="export the Hasse diagram")
    gr.add_argument("--n", type=_nonneg, required=True)
    gr.add_argument("--h", type=_nonneg, required=True)
    gr.add_argument("--format", choices=sorted(FORMATS), default="edges")
    gr.add_argument("--out", help="write here instead of stdout")

    ver = sub.add_parser("verify", help="cross-check every identity against brute force")
    ver.add_argument("--max-n", type=_nonneg, required=True)
    ver.add_argument("--max-h", type=_nonneg, required=True)
    return parser


def cmd_count(args, out):
    p = PathPower(args.n, args.h)
    value = c.count_independent_closed(p) if args.k is None else c.count_independent_k(p, args.k)
    out.write(f"{value}\n")
    return 0


def cmd_edges(args, out):
    p = PathPower(args.n, args.h)
    if args.method == "closed":
        value = c.edges_rank_weighted(p)
    elif args.method == "convolution":
        value = c.edges_convolution(p)
    else:
        value = edge_count(build_hasse(p))
    out.write(f"{value}\n")
    return 0


def cmd_sequence(args, out):
    if args.kind == "p":
        values = c.independent_sequence(args.h, args.limit)
    elif args.kind == "fib":
        values = c.fibonacci_window(args.h, args.limit).values
    else:
        values = c.edges_sequence(args.h, args.limit)
    out.write("".join(f"{v}\n" for v in values))
    return 0


def cmd_graph(args, out):
    text = FORMATS[args.format](build_hasse(PathPower(args.n, args.h)))
    if args.out is None:
        out.write(text)
        return 0
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"pathcubes: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return 0


def cmd_verify(args, out):
    results = verify(args.max_n, args.max_h)
    for r in results:
        if r.passed:
            out.write(f"PASS  {r.name} ({r.checks} checks)\n")
        else:
            out.write(f"FAIL  {r.name}: counterexample {r.counterexample}\n")
    failed = [r for r in results if not r.passed]
    total = sum(r.checks for r in results)
    out.write(
        f"summary: {len(results) - len(failed)}/{len(results)} families pass, "
        f"{total} checks, max-n={args.max_n} max-h={args.max_h}\n"
    )
    return EXIT_COUNTEREXAMPLE if failed else 0


COMMANDS = {
    "count": cmd_count,
    "edges": cmd_edges,
    "sequence": cmd_sequence,
    "graph": cmd_graph,
    "verify": cmd_verify,
}


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.max_n > MAX_N:
        parser.error(f"--max-n {args.max_n} exceeds the oracle cap of {MAX_N}")
    try:
        return COMMANDS[args.command](args, out)
    except CapacityError as exc:
        print(f"pathcubes: {exc}", file=sys.stderr)
        return EXIT_CAPACITY


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
