"""Command-line entry point.

    recol INPUT [--format col|edges|auto] [--time-limit SECS] [--seed N]
          [--seeds SPEC | --runs N] [--output FILE] [--stats FILE]
          [--verify] [--max-rounds N]

Exit codes: 0 success (a proper coloring was produced and verified),
1 usage error, 2 parse error, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from . import io as rio
from .oracle import verify_coloring
from .solver import InternalInvariantError, SolverConfig, best_coloring_certificate, solve

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_INTERNAL = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad usage; we reserve 2 for parse errors
    def error(self, message: str) -> None:
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="recol",
        description="Anytime reduction-based graph coloring for large sparse graphs.",
    )
    p.add_argument("input", help="graph file (DIMACS .col or edge list)")
    p.add_argument(
        "--format",
        choices=("col", "edges", "auto"),
        default="auto",
        help="input format; auto looks for a DIMACS problem line (default: auto)",
    )
    p.add_argument("--time-limit", type=float, default=60.0, metavar="SECS")
    p.add_argument("--seed", type=int, default=0, metavar="N")
    p.add_argument(
        "--seeds",
        metavar="SPEC",
        help="batch mode seed list, e.g. '0..9' or '0,2,5'; overrides --seed",
    )
    p.add_argument(
        "--runs",
        type=int,
        metavar="N",
        help="batch mode with seeds 0..N-1 (ignored when --seeds is given)",
    )
    p.add_argument("--output", metavar="FILE", help="write the best coloring here")
    p.add_argument("--stats", metavar="FILE", help="write JSON stats documents here")
    p.add_argument(
        "--verify",
        action="store_true",
        help="print an explicit verification line for the reported coloring",
    )
    p.add_argument(
        "--max-rounds",
        type=int,
        default=None,
        metavar="N",
        help="stop after N rounds even if time remains (mainly for testing)",
    )
    return p


def parse_seed_spec(spec: str) -> list[int]:
    spec = spec.strip()
    if ".." in spec:
        lo_text, hi_text = spec.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
        if hi < lo:
            raise ValueError(f"empty seed range {spec!r}")
        return list(range(lo, hi + 1))
    return [int(tok) for tok in spec.split(",") if tok.strip()]


def detect_format(path: Path) -> str:
    """DIMACS if the first meaningful line is a comment or problem line."""
    with path.open("r", encoding="utf-8", errors="replace") as fh:
        for raw in fh:
            line = raw.strip()
            if not line:
                continue
            head = line.split()[0]
            if head in ("c", "p", "e"):
                return "col"
            return "edges"
    return "edges"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.seeds is not None:
            seeds = parse_seed_spec(args.seeds)
        elif args.runs is not None:
            if args.runs < 1:
                raise ValueError("--runs must be at least 1")
            seeds = list(range(args.runs))
        else:
            seeds = [args.seed]
        if not seeds:
            raise ValueError("no seeds to run")
    except (_UsageError, ValueError) as exc:
        print(f"recol: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    path = Path(args.input)
    try:
        if not path.exists():
            raise rio.ParseError(f"no such file: {path}")
        fmt = args.format if args.format != "auto" else detect_format(path)
        with path.open("r", encoding="utf-8", errors="replace") as fh:
            if fmt == "col":
                graph, labels = rio.parse_dimacs_col(fh)
            else:
                graph, labels = rio.parse_edge_list(fh)
        if graph.n == 0:
            raise rio.ParseError("graph has no vertices")
    except rio.ParseError as exc:
        print(f"recol: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    base_config = SolverConfig(
        time_limit=args.time_limit, seed=seeds[0], max_rounds=args.max_rounds
    )
    try:
        runs: list[rio.RunStats] = []
        best = None
        for seed in seeds:
            config = replace(base_config, seed=seed)
            result = solve(graph, config)
            coloring = best_coloring_certificate(result, graph)
            if not verify_coloring(graph, coloring):
                raise InternalInvariantError("oracle rejected the witness coloring")
            runs.append(rio.collect_run_stats(path.name, graph, config, result))
            if best is None or result.ans < best[0].ans:
                best = (result, coloring)
    except InternalInvariantError as exc:
        print(f"recol: internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL

    result, coloring = best
    if args.output:
        with open(args.output, "w", encoding="utf-8") as out:
            rio.write_coloring(coloring, labels, out)
    if args.stats:
        with open(args.stats, "w", encoding="utf-8") as out:
            for run in runs:
                rio.emit_stats(run, out)
            if len(runs) > 1:
                rio.emit_summary(runs, out)

    if len(runs) > 1:
        summary = rio.summarize_runs(runs)
        print(
            f"{path.name}: n={graph.n} m={graph.m} "
            f"min={summary['min']} avg={summary['avg']:.1f} "
            f"hits={summary['hits']}/{summary['runs']} seeds={args.seeds or len(runs)}"
        )
    else:
        print(
            f"{path.name}: n={graph.n} m={graph.m} seed={result.seed} "
            f"colors={result.ans} time={result.wall_time_s:.2f}s"
        )
    if args.verify:
        print(f"verified: proper coloring with {coloring.k} colors")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
