"""Command-line entry point: ``sprofile gen|verify|bench|peel``."""

from __future__ import annotations

import argparse
import re
import sys

from . import bench, peel, streamgen
from .events import InvalidArgument

_POWER = re.compile(r"^(\d+)\s*(?:\^|\*\*)\s*(\d+)$")


def count(text: str) -> int:
    """Non-negative integer; also accepts ``1e6``, ``10^6``, ``10**6`` and ``1_000``."""
    s = text.strip().replace("_", "")
    if m := _POWER.match(s):
        return int(m.group(1)) ** int(m.group(2))
    try:
        value = int(s)
    except ValueError:
        try:
            f = float(s)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        if not f.is_integer():
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        value = int(f)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return value


def positive(text: str) -> int:
    v = count(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return v


def count_list(text: str) -> list[int]:
    return [positive(t) for t in text.split(",") if t.strip()]


def name_list(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def probability(text: str) -> float:
    try:
        p = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 <= p <= 1.0:
        raise argparse.ArgumentTypeError(f"must lie in [0, 1]: {text!r}")
    return p


def _stream_args(p: argparse.ArgumentParser, n_default=None):
    p.add_argument("--preset", choices=streamgen.PRESETS, default="stream1")
    p.add_argument("--n", type=count, required=n_default is None, default=n_default,
                   help="number of events")
    p.add_argument("--m", type=positive, required=True, help="number of distinct objects")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p-add", type=probability, default=0.7, dest="p_add",
                   help="probability that an event is an add (default 0.7)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sprofile", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a synthetic stream file")
    _stream_args(g)
    g.add_argument("--out", required=True, help="output path, '-' for stdout")

    v = sub.add_parser("verify", help="check the profile against the brute-force oracle")
    _stream_args(v)

    b = sub.add_parser("bench", help="time update+query loops and emit CSV")
    b.add_argument("--query", choices=bench.QUERIES, default="mode")
    b.add_argument("--impl", type=name_list, default=None,
                   help="comma-separated subset of sprofile,heap,ost,noop")
    b.add_argument("--preset", choices=streamgen.PRESETS, default="stream1")
    b.add_argument("--n", type=count_list, required=True, help="comma-separated event counts")
    b.add_argument("--m", type=count_list, required=True, help="comma-separated universe sizes")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--p-add", type=probability, default=0.7, dest="p_add")
    b.add_argument("--repeats", type=positive, default=3)
    b.add_argument("--out", default="-", help="CSV path (appended), '-' for stdout")

    p = sub.add_parser("peel", help="degeneracy and core numbers of an edge-list graph")
    p.add_argument("graph", help="edge-list file")
    return parser


def cmd_gen(args) -> int:
    cfg = streamgen.preset(args.preset, args.n, args.m, args.seed, args.p_add)
    events = streamgen.generate(cfg)
    if args.out == "-":
        sys.stdout.buffer.write(streamgen.format_stream(events))
        sys.stdout.flush()
    else:
        streamgen.write_stream(args.out, events)
    return 0


def cmd_verify(args) -> int:
    cfg = streamgen.preset(args.preset, args.n, args.m, args.seed, args.p_add)
    report = bench.verify_stream(streamgen.generate(cfg), args.m)
    for line in report.failures:
        print(line, file=sys.stderr)
    status = "ok" if report.ok else "FAILED"
    print(f"{status}: {report.events} events, {report.checks} checkpoints, "
          f"{len(report.failures)} mismatches")
    return 0 if report.ok else 1


def cmd_bench(args) -> int:
    impls = args.impl or (["sprofile", "heap"] if args.query != "median" else ["sprofile", "ost"])

    def log(rec):
        print(f"{rec.impl:>8} {rec.query} {rec.preset} n={rec.n} m={rec.m} "
              f"{rec.elapsed_seconds:.4f}s {rec.updates_per_second:,.0f}/s", file=sys.stderr)

    records = bench.run_bench(args.query, impls, args.preset, args.n, args.m,
                              seed=args.seed, repeats=args.repeats, p_add=args.p_add, log=log)
    if args.out == "-":
        import csv
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(bench.CSV_HEADER)
        w.writerows(r.row() for r in records)
    else:
        bench.write_csv(args.out, records)
    return 0


def cmd_peel(args) -> int:
    result = peel.degeneracy_order(peel.read_edge_list(args.graph))
    print(f"degeneracy {result.degeneracy}")
    for u in sorted(result.core):
        print(f"{u} {result.core[u]}")
    return 0


COMMANDS = {"gen": cmd_gen, "verify": cmd_verify, "bench": cmd_bench, "peel": cmd_peel}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (InvalidArgument, ValueError, OSError, bench.BenchError) as exc:
        print(f"sprofile {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
