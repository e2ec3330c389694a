#!/usr/bin/env python3
"""Run the ten-seed benchmark protocol over a directory of instances.

For every graph file in the directory, runs the solver with seeds 0..9
under the given time limit and prints one summary row per instance
(best answer, mean answer, and the number of runs hitting the best).
JSON stats documents for every run can be appended to a file with
--stats-out.

    python scripts/run_benchmark.py instances/ --time-limit 60
"""

import argparse
import sys
import time
from pathlib import Path

from recol import SolverConfig, collect_run_stats, emit_stats, emit_summary, solve, summarize_runs, verify_coloring
from recol.cli import detect_format
from recol.io import parse_dimacs_col, parse_edge_list
from recol.solver import warmup

SUFFIXES = {".txt", ".col", ".edges", ".graph", ".mtx-skip"}


def load(path: Path):
    fmt = detect_format(path)
    with path.open("r", encoding="utf-8", errors="replace") as fh:
        return (parse_dimacs_col if fmt == "col" else parse_edge_list)(fh)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("directory", help="directory of .col / edge-list files")
    parser.add_argument("--time-limit", type=float, default=60.0)
    parser.add_argument("--seeds", type=int, default=10, help="runs per instance, seeds 0..N-1")
    parser.add_argument("--stats-out", help="append per-run JSON documents here")
    args = parser.parse_args()

    paths = sorted(
        p for p in Path(args.directory).iterdir()
        if p.is_file() and (p.suffix in SUFFIXES or p.suffix == "")
    )
    if not paths:
        print(f"no instance files found in {args.directory}", file=sys.stderr)
        return 1

    warmup()
    stats_sink = open(args.stats_out, "a") if args.stats_out else None
    print(f"{'instance':<28} {'n':>9} {'m':>10} {'min':>5} {'avg':>7} {'hits':>5} {'time':>7}")
    for path in paths:
        graph, _labels = load(path)
        if graph.n == 0:
            print(f"{path.name:<28} skipped: empty graph")
            continue
        runs = []
        started = time.monotonic()
        for seed in range(args.seeds):
            config = SolverConfig(time_limit=args.time_limit, seed=seed)
            result = solve(graph, config)
            assert verify_coloring(graph, result.best_coloring)
            runs.append(collect_run_stats(path.name, graph, config, result))
            if stats_sink:
                emit_stats(runs[-1], stats_sink)
        if stats_sink:
            emit_summary(runs, stats_sink)
        summary = summarize_runs(runs)
        print(
            f"{path.name:<28} {graph.n:>9} {graph.m:>10} {summary['min']:>5} "
            f"{summary['avg']:>7.1f} {summary['hits']:>4}/{args.seeds} "
            f"{time.monotonic() - started:>6.1f}s"
        )
    if stats_sink:
        stats_sink.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
