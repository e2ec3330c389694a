"""Graph parsing, coloring output, and machine-readable run statistics.

Two input formats are supported: DIMACS ``.col`` (``p edge n m`` followed
by 1-based ``e u v`` lines) and whitespace-separated edge lists with
arbitrary integer labels and ``#`` comments. Both parsers stream in
buffered chunks with a vectorized integer scan on the happy path and a
per-line fallback that reports exact line numbers; external labels map to
dense internal ids through a :class:`LabelMap`.

Stats documents are single-line JSON objects, one per run (see README for
the schema). Wall-clock fields are the only ones that vary between
identical runs.
"""

from __future__ import annotations

import json
import warnings
from array import array
from dataclasses import asdict, dataclass
from typing import IO, Iterable

import numpy as np

from .coloring import Coloring
from .graph import Graph, build_graph
from .solver import RoundRecord, SolveResult, SolverConfig

STATS_SCHEMA_VERSION = 1


class ParseError(ValueError):
    """Malformed graph input; carries the 1-based line number when known."""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class LabelMap:
    """Bijection between external integer labels and dense internal ids.

    The label -> id index is built lazily; parsing a million-vertex file
    should not pay for a dict nobody queries.
    """

    __slots__ = ("external", "_to_id")

    def __init__(self, external: np.ndarray):
        self.external = np.asarray(external, dtype=np.int64)
        if np.unique(self.external).size != self.external.size:
            raise ValueError("labels must be distinct")
        self._to_id: dict[int, int] | None = None

    @classmethod
    def identity_one_based(cls, n: int) -> "LabelMap":
        return cls(np.arange(1, n + 1, dtype=np.int64))

    def to_internal(self, label: int) -> int:
        if self._to_id is None:
            self._to_id = {int(lab): i for i, lab in enumerate(self.external)}
        return self._to_id[int(label)]

    def to_external(self, vertex: int) -> int:
        return int(self.external[vertex])

    def __len__(self) -> int:
        return int(self.external.size)


class _DimacsState:
    __slots__ = ("n", "declared_m")

    def __init__(self) -> None:
        self.n: int | None = None
        self.declared_m: int | None = None


def _dimacs_lines_slow(lines: Iterable[str], start_lineno: int, state: _DimacsState) -> np.ndarray:
    """Per-line reference parser for DIMACS blocks (errors, header lines)."""
    us = array("q")
    vs = array("q")
    for offset, raw in enumerate(lines):
        lineno = start_lineno + offset
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if state.n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(parts) != 4:
                raise ParseError(f"malformed problem line: {line!r}", lineno)
            try:
                state.n = int(parts[2])
                state.declared_m = int(parts[3])
            except ValueError:
                raise ParseError(f"malformed problem line: {line!r}", lineno) from None
            if state.n < 0 or state.declared_m < 0:
                raise ParseError("negative counts in problem line", lineno)
        elif parts[0] == "e":
            if state.n is None:
                raise ParseError("edge line before problem line", lineno)
            if len(parts) != 3:
                raise ParseError(f"malformed edge line: {line!r}", lineno)
            try:
                u = int(parts[1])
                v = int(parts[2])
            except ValueError:
                raise ParseError(f"malformed edge line: {line!r}", lineno) from None
            if not (1 <= u <= state.n and 1 <= v <= state.n):
                raise ParseError(
                    f"edge ({u}, {v}) outside vertex range 1..{state.n}", lineno
                )
            us.append(u - 1)
            vs.append(v - 1)
        else:
            raise ParseError(f"unrecognized line: {line!r}", lineno)
    out = np.empty((len(us), 2), dtype=np.int64)
    out[:, 0] = np.frombuffer(us, dtype=np.int64)
    out[:, 1] = np.frombuffer(vs, dtype=np.int64)
    return out


def _dimacs_block(block: str, start_lineno: int, state: _DimacsState) -> np.ndarray:
    """Bulk-convert a block of ``e u v`` lines; anything else (header,
    comments, malformed lines) goes through the per-line parser."""
    if "\r" in block:
        block = block.replace("\r\n", "\n")
    if state.n is None:
        # peel comments and the problem line off line by line, then retry
        lines = block.split("\n")
        head_end = -1
        for i, raw in enumerate(lines):
            stripped = raw.strip()
            if stripped and not stripped.startswith("c"):
                head_end = i
                break
        if head_end < 0:
            return _dimacs_lines_slow(lines, start_lineno, state)
        _dimacs_lines_slow(lines[: head_end + 1], start_lineno, state)
        return _dimacs_block(
            "\n".join(lines[head_end + 1 :]), start_lineno + head_end + 1, state
        )
    body = block.rstrip("\n")
    if not body:
        return np.empty((0, 2), dtype=np.int64)
    line_count = body.count("\n") + 1
    e_count = body.count("\ne") + (1 if body.startswith("e") else 0)
    if e_count != line_count:
        return _dimacs_lines_slow(block.split("\n"), start_lineno, state)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DeprecationWarning)
        try:
            flat = np.fromstring(body.replace("e", " "), dtype=np.int64, sep=" ")
        except ValueError:
            flat = None
    if flat is None or flat.size != 2 * e_count:
        return _dimacs_lines_slow(block.split("\n"), start_lineno, state)
    if flat.size and (int(flat.min()) < 1 or int(flat.max()) > state.n):
        # re-scan to report the exact offending line
        return _dimacs_lines_slow(block.split("\n"), start_lineno, state)
    return flat.reshape(-1, 2) - 1


def parse_dimacs_col(stream: Iterable[str]) -> tuple[Graph, LabelMap]:
    """Parse DIMACS ``.col`` text: ``c`` comments, one ``p edge <n> <m>``
    line, then ``e <u> <v>`` lines with 1-based endpoints.

    Streams in chunks with a vectorized scan over runs of edge lines.
    Self-loops and duplicates are cleaned while building; a declared edge
    count disagreeing with the parsed or cleaned count is a warning, not
    an error.
    """
    state = _DimacsState()
    parts = [
        _dimacs_block(block, lineno, state)
        for block, lineno in _edge_blocks(stream)
    ]
    if state.n is None:
        raise ParseError("missing problem line")
    if parts:
        pairs = np.concatenate(parts, axis=0)
    else:
        pairs = np.empty((0, 2), dtype=np.int64)
    graph = build_graph(state.n, pairs)
    raw_count = int(pairs.shape[0])
    declared = state.declared_m
    if declared is not None and (declared != raw_count or declared != graph.m):
        warnings.warn(
            f"declared edge count {declared} differs from parsed count "
            f"{raw_count} (cleaned: {graph.m})",
            stacklevel=2,
        )
    return graph, LabelMap.identity_one_based(n=state.n)


def _parse_pair_lines(lines: Iterable[str], start_lineno: int) -> np.ndarray:
    """Per-line reference parser; precise errors, used off the fast path."""
    us = array("q")
    vs = array("q")
    for offset, raw in enumerate(lines):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(
                f"expected two labels, got: {line!r}", start_lineno + offset
            )
        try:
            us.append(int(parts[0]))
            vs.append(int(parts[1]))
        except ValueError:
            raise ParseError(
                f"non-integer label in: {line!r}", start_lineno + offset
            ) from None
    out = np.empty((len(us), 2), dtype=np.int64)
    out[:, 0] = np.frombuffer(us, dtype=np.int64)
    out[:, 1] = np.frombuffer(vs, dtype=np.int64)
    return out


_CHUNK_CHARS = 1 << 23


def _edge_blocks(stream) -> Iterable[tuple[str, int]]:
    """Yield (whole-lines text, first line number) blocks from the stream."""
    if not hasattr(stream, "read"):
        yield "\n".join(stream), 1
        return
    carry = ""
    lineno = 1
    while True:
        chunk = stream.read(_CHUNK_CHARS)
        if not chunk:
            if carry:
                yield carry, lineno
            return
        chunk = carry + chunk
        cut = chunk.rfind("\n")
        if cut < 0:
            carry = chunk
            continue
        body, carry = chunk[: cut + 1], chunk[cut + 1 :]
        yield body, lineno
        lineno += body.count("\n")


def _fast_int_pairs(block: str, start_lineno: int) -> np.ndarray:
    """Bulk-convert a block of pair lines, falling back to the per-line
    parser when anything about the block looks off."""
    if "\r" in block:
        block = block.replace("\r\n", "\n")
    lines = block.split("\n")
    data = [ln for ln in lines if ln and not ln.startswith("#")]
    if not data:
        return np.empty((0, 2), dtype=np.int64)
    expected = 2 * len(data)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DeprecationWarning)
        try:
            flat = np.fromstring("\n".join(data), dtype=np.int64, sep=" ")
        except ValueError:
            flat = None
    if flat is None or flat.size != expected:
        return _parse_pair_lines(lines, start_lineno)
    return flat.reshape(-1, 2)


def parse_edge_list(stream: Iterable[str]) -> tuple[Graph, LabelMap]:
    """Parse an edge list: one ``<label> <label>`` pair per line, ``#``
    comments ignored. Labels are arbitrary integers, compacted to dense ids
    in sorted label order.

    Reads in buffered chunks with a vectorized integer scan, so
    million-edge files take seconds; malformed blocks are re-parsed line
    by line to report an exact line number.
    """
    parts = [
        _fast_int_pairs(block, lineno) for block, lineno in _edge_blocks(stream)
    ]
    if parts:
        pairs = np.concatenate(parts, axis=0)
    else:
        pairs = np.empty((0, 2), dtype=np.int64)
    labels = np.unique(pairs)
    mapped = np.searchsorted(labels, pairs) if pairs.size else pairs
    return build_graph(int(labels.size), mapped), LabelMap(labels)


def write_coloring(coloring: Coloring, labels: LabelMap, sink: IO[str]) -> None:
    """Write ``s <k>`` then one ``<external label> <color>`` line per
    vertex, colors 0-based, vertices in internal id order."""
    if coloring.n == 0 or not coloring.covers_all:
        raise ValueError("write_coloring requires a complete, nonempty coloring")
    if len(labels) != coloring.n:
        raise ValueError("label map size differs from coloring")
    sink.write(f"s {coloring.k}\n")
    for v in range(coloring.n):
        sink.write(f"{labels.to_external(v)} {coloring.assignment[v]}\n")


def write_edge_list(graph: Graph, labels: LabelMap, sink: IO[str]) -> None:
    """Write the graph back out as an edge list under its external labels."""
    eu, ev = graph.edge_arrays()
    for u, v in zip(eu, ev):
        sink.write(f"{labels.to_external(int(u))} {labels.to_external(int(v))}\n")


@dataclass
class RunStats:
    """Everything a single solve run reports, JSON-serializable."""

    instance: str
    n: int
    m: int
    seed: int
    time_limit_s: float
    ans: int
    proven_lower_bound: int | None
    rounds: int
    time_to_best_s: float
    wall_time_s: float
    removed_degree: int
    removed_dominate: int
    removed_crown1: int
    removed_crown2: int
    removed_indset: int
    trajectory: list[RoundRecord]


def collect_run_stats(
    instance: str, graph: Graph, config: SolverConfig, result: SolveResult
) -> RunStats:
    return RunStats(
        instance=instance,
        n=graph.n,
        m=graph.m,
        seed=result.seed,
        time_limit_s=config.time_limit,
        ans=result.ans,
        proven_lower_bound=result.proven_lower_bound,
        rounds=result.rounds,
        time_to_best_s=result.time_to_best_s,
        wall_time_s=result.wall_time_s,
        removed_degree=sum(r.removed_degree for r in result.trajectory),
        removed_dominate=sum(r.removed_dominate for r in result.trajectory),
        removed_crown1=sum(r.removed_crown1 for r in result.trajectory),
        removed_crown2=sum(r.removed_crown2 for r in result.trajectory),
        removed_indset=sum(r.removed_indset for r in result.trajectory),
        trajectory=list(result.trajectory),
    )


def stats_document(stats: RunStats) -> dict:
    doc = asdict(stats)
    doc["schema_version"] = STATS_SCHEMA_VERSION
    doc["document"] = "run"
    return doc


def emit_stats(stats: RunStats, sink: IO[str]) -> None:
    """One single-line JSON document per run."""
    sink.write(json.dumps(stats_document(stats), sort_keys=True) + "\n")


def summarize_runs(runs: list[RunStats]) -> dict:
    """The per-instance aggregation row: best answer over the runs, the
    mean, and how many runs hit the best."""
    if not runs:
        raise ValueError("no runs to summarize")
    answers = [r.ans for r in runs]
    best = min(answers)
    return {
        "document": "summary",
        "schema_version": STATS_SCHEMA_VERSION,
        "instance": runs[0].instance,
        "n": runs[0].n,
        "m": runs[0].m,
        "seeds": [r.seed for r in runs],
        "runs": len(runs),
        "min": best,
        "avg": sum(answers) / len(answers),
        "hits": sum(1 for a in answers if a == best),
    }


def emit_summary(runs: list[RunStats], sink: IO[str]) -> None:
    sink.write(json.dumps(summarize_runs(runs), sort_keys=True) + "\n")
