"""recol: anytime reduction-based graph coloring for large sparse graphs."""

from .bounds import BoundState, CliqueSearchParams, degeneracy_color, dsatur_color, find_clique
from .coloring import Coloring, is_proper
from .extraction import find_independent_set
from .graph import Graph, GraphInputError, SubgraphView, build_graph, induced_subgraph
from .io import (
    LabelMap,
    ParseError,
    RunStats,
    collect_run_stats,
    emit_stats,
    emit_summary,
    parse_dimacs_col,
    parse_edge_list,
    summarize_runs,
    write_coloring,
    write_edge_list,
)
from .oracle import brute_force_chromatic, brute_force_coloring, brute_force_max_clique, verify_coloring
from .reduction import (
    Crown1,
    Crown2,
    DegreeRemoved,
    Dominated,
    ExtractedClass,
    FixpointSummary,
    IndepClass,
    ReconstructionError,
    ReductionEvent,
    ReductionTrace,
    TraceReplayError,
    reconstruct,
    reduce_crown1,
    reduce_crown2,
    reduce_degree,
    reduce_dominate,
    reduce_indset,
    replay_trace,
    run_fixpoint,
)
from .solver import (
    InternalInvariantError,
    RoundRecord,
    SolveResult,
    SolverConfig,
    best_coloring_certificate,
    solve,
    warmup,
)

__version__ = "0.1.0"

__all__ = [
    "BoundState",
    "CliqueSearchParams",
    "Coloring",
    "Crown1",
    "Crown2",
    "DegreeRemoved",
    "Dominated",
    "ExtractedClass",
    "FixpointSummary",
    "Graph",
    "GraphInputError",
    "IndepClass",
    "InternalInvariantError",
    "LabelMap",
    "ParseError",
    "ReconstructionError",
    "ReductionEvent",
    "ReductionTrace",
    "RoundRecord",
    "RunStats",
    "SolveResult",
    "SolverConfig",
    "SubgraphView",
    "TraceReplayError",
    "best_coloring_certificate",
    "brute_force_chromatic",
    "brute_force_coloring",
    "brute_force_max_clique",
    "build_graph",
    "collect_run_stats",
    "degeneracy_color",
    "dsatur_color",
    "emit_stats",
    "emit_summary",
    "find_clique",
    "find_independent_set",
    "induced_subgraph",
    "is_proper",
    "parse_dimacs_col",
    "parse_edge_list",
    "reconstruct",
    "reduce_crown1",
    "reduce_crown2",
    "reduce_degree",
    "reduce_dominate",
    "reduce_indset",
    "replay_trace",
    "run_fixpoint",
    "solve",
    "summarize_runs",
    "verify_coloring",
    "warmup",
    "write_coloring",
    "write_edge_list",
]
