"""Command-line harness: gen, run, fuzz, bench.

Exit codes: 0 verified / all passed, 1 oracle mismatch, 2 usage errors.
"""

import argparse
import sys
from pathlib import Path

from .counters import CounterReport
from .harness import (ALGORITHMS, bench, bench_sizes, fuzz, offline_oracle,
                      read_trace, run, snap_size, write_trace)
from .planar_core import KINDS, format_graph, generate, parse_graph


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planardc",
                                description="decremental planar connectivity harness")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate an embedded planar graph file")
    g.add_argument("--kind", choices=KINDS, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=True)

    r = sub.add_parser("run", help="replay a trace with one algorithm")
    r.add_argument("--algo", choices=ALGORITHMS, required=True)
    r.add_argument("--graph", required=True)
    r.add_argument("--trace", required=True)
    r.add_argument("--csv", help="append the counter report to this CSV file")
    r.add_argument("--verify-oracle", action="store_true",
                   help="compare answers and verdicts against the oracle")

    f = sub.add_parser("fuzz", help="randomized oracle cross-checking")
    f.add_argument("--algo", choices=ALGORITHMS, required=True)
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--kind", choices=KINDS, default="stacked_triangulation")
    f.add_argument("--seeds", required=True, help="range A..B (inclusive)")

    b = sub.add_parser("bench", help="counter scaling across sizes")
    b.add_argument("--algo", choices=ALGORITHMS, required=True)
    b.add_argument("--sizes", required=True, help="e.g. 2^10..2^17 or 1024,4096")
    b.add_argument("--kind", choices=KINDS, default="stacked_triangulation")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--csv", help="write counter reports to this CSV file")
    return p


def _append_csv(path: str, reports: list[CounterReport]) -> None:
    file = Path(path)
    lines = [] if file.exists() and file.stat().st_size else [CounterReport.CSV_HEADER]
    lines += [rep.csv_row() for rep in reports]
    with file.open("a") as fh:
        fh.write("\n".join(lines) + "\n")


def _cmd_gen(args) -> int:
    g = generate(args.kind, args.n, args.seed)
    Path(args.out).write_text(format_graph(g))
    print(f"wrote {args.kind} n={g.vertex_count} m={g.edge_count_alive} to {args.out}")
    return 0


def _cmd_run(args) -> int:
    g = parse_graph(Path(args.graph).read_text())
    embedded, trace = read_trace(Path(args.trace).read_text())
    if embedded is not None:
        g = embedded
    answers, criticals, report = run(args.algo, g, trace)
    for a in answers:
        print(a)
    if args.csv:
        _append_csv(args.csv, [report])
    if args.verify_oracle:
        exp_answers, exp_criticals = offline_oracle(g, trace)
        ok = answers == exp_answers and criticals == exp_criticals
        if trace.expected is not None:
            ok = ok and answers == trace.expected
        print("verified" if ok else "MISMATCH", file=sys.stderr)
        return 0 if ok else 1
    return 0


def _cmd_fuzz(args) -> int:
    lo, hi = args.seeds.split("..")
    failures = 0
    for seed in range(int(lo), int(hi) + 1):
        result = fuzz(seed, args.n, kind=args.kind, algorithm=args.algo)
        if not result.ok:
            failures += 1
            print(result.describe(), file=sys.stderr)
            print(write_trace(result.minimized, result.graph), end="")
    total = int(hi) - int(lo) + 1
    print(f"{total - failures}/{total} seeds passed", file=sys.stderr)
    return 0 if failures == 0 else 1


def _cmd_bench(args) -> int:
    sizes = bench_sizes(args.sizes)
    reports = bench(args.algo, sizes, kind=args.kind, seed=args.seed,
                    division_cache={})
    print(CounterReport.CSV_HEADER)
    for rep in reports:
        print(rep.csv_row())
    if args.csv:
        _append_csv(args.csv, reports)
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        handler = {"gen": _cmd_gen, "run": _cmd_run,
                   "fuzz": _cmd_fuzz, "bench": _cmd_bench}[args.command]
        return handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
