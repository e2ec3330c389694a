"""The anytime solve loop: rounds of bounding, reduction and extraction.

Each round restarts from the original graph, interleaves clique lower
bounds and greedy/DSatur upper bounds with reduction fixpoints, and falls
back to independent-set extraction when nothing moves. The best kernel
coloring seen in a round is reconstructed to a proper coloring of the
whole graph; the reported answer is always witnessed by one.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

import numpy as np

from .bounds import CliqueSearchParams, degeneracy_color, dsatur_color, find_clique
from .coloring import Coloring, is_proper
from .extraction import find_independent_set
from .graph import Graph, SubgraphView
from .reduction import (
    Crown1,
    Crown2,
    DegreeRemoved,
    Dominated,
    ExtractedClass,
    IndepClass,
    ReductionTrace,
    reconstruct,
    run_fixpoint,
)


class InternalInvariantError(RuntimeError):
    """A stored witness failed re-verification."""


@dataclass
class SolverConfig:
    time_limit: float = 60.0
    seed: int = 0
    epsilon: float = 0.01
    sample_size: int = 64
    domination_vertex_limit: int = 200
    indset_non_neighbor_limit: int = 10
    # optional cap on completed rounds; None means run until the deadline
    max_rounds: int | None = None

    def __post_init__(self) -> None:
        if self.time_limit <= 0:
            raise ValueError("time_limit must be positive")
        if self.domination_vertex_limit < 0 or self.indset_non_neighbor_limit < 0:
            raise ValueError("limits must be non-negative")
        if self.max_rounds is not None and self.max_rounds < 1:
            raise ValueError("max_rounds must be at least 1 when set")


@dataclass(frozen=True, slots=True)
class RoundRecord:
    index: int
    lb: int
    ub: int
    kernel_size: int
    wall_time_s: float
    removed_degree: int
    removed_dominate: int
    removed_crown1: int
    removed_crown2: int
    removed_indset: int
    extracted_classes: int
    extracted_vertices: int


@dataclass
class SolveResult:
    ans: int
    best_coloring: Coloring
    rounds: int
    trajectory: list[RoundRecord]
    seed: int
    proven_lower_bound: int | None
    time_to_best_s: float
    wall_time_s: float


def _round_rng(seed: int, round_index: int) -> random.Random:
    # string seeding is stable across platforms and Python versions
    return random.Random(f"{seed}:{round_index}")


def _tally_rules(events) -> tuple[int, int, int, int, int, int, int]:
    degree = dominate = crown1 = crown2 = indset = classes = extracted = 0
    for e in events:
        if isinstance(e, DegreeRemoved):
            degree += 1
        elif isinstance(e, Dominated):
            dominate += 1
        elif isinstance(e, Crown1):
            crown1 += len(e.members)
        elif isinstance(e, Crown2):
            crown2 += 4
        elif isinstance(e, IndepClass):
            indset += len(e.members)
        elif isinstance(e, ExtractedClass):
            classes += 1
            extracted += len(e.members)
    return degree, dominate, crown1, crown2, indset, classes, extracted


def solve(base: Graph, config: SolverConfig | None = None) -> SolveResult:
    """Run the anytime loop on ``base`` until the wall-clock budget runs
    out, the configured round cap is reached, or optimality is proven.

    The first inner iteration of round 1 always runs to completion so a
    witness exists even under tiny budgets. A round that extracted no
    independent set ends with a valid lower bound on the chromatic number;
    when that ever reaches the answer, the solve stops early.
    """
    if config is None:
        config = SolverConfig()
    if base.n == 0:
        raise ValueError("solve requires a nonempty graph")
    start = time.monotonic()
    deadline = start + config.time_limit

    if base.m == 0:
        coloring = Coloring(base.n, np.zeros(base.n, dtype=np.int64))
        return SolveResult(
            ans=1,
            best_coloring=coloring,
            rounds=0,
            trajectory=[],
            seed=config.seed,
            proven_lower_bound=1,
            time_to_best_s=time.monotonic() - start,
            wall_time_s=time.monotonic() - start,
        )

    params = CliqueSearchParams(config.epsilon, config.sample_size)
    ans = base.n
    best_coloring: Coloring | None = None
    time_to_best = 0.0
    proven_lb = 1
    have_proven_round = False
    trajectory: list[RoundRecord] = []
    round_index = 0

    while True:
        round_index += 1
        rng = _round_rng(config.seed, round_index)
        view = SubgraphView(base)
        trace = ReductionTrace()
        lb, ub, usedcol = 0, base.n, 0
        extractions = 0
        degeneracy_done = round_index > 1
        # candidates for reconstruction: (kernel coloring, trace prefix, nominal value)
        best_witness: tuple[Coloring, int, int] | None = None
        empty_witness: tuple[Coloring, int, int] | None = None
        first_iteration = True

        while view.alive_count > 0 and lb < ub:
            if not ((round_index == 1 and first_iteration) or time.monotonic() < deadline):
                break
            first_iteration = False

            temp_lb, _witness = find_clique(view, lb, usedcol, params, rng)
            if not degeneracy_done:
                degeneracy_done = True
                temp_ub, kernel_coloring = degeneracy_color(view, ub, usedcol)
            else:
                temp_ub, kernel_coloring = dsatur_color(view, ub, usedcol, rng)
            if kernel_coloring is not None and (
                best_witness is None or temp_ub < best_witness[2]
            ):
                best_witness = (kernel_coloring, len(trace), temp_ub)

            alive_before = view.alive_count
            summary = run_fixpoint(
                view,
                max(1, temp_lb - usedcol),
                trace,
                deadline,
                domination_vertex_limit=config.domination_vertex_limit,
                indset_non_neighbor_limit=config.indset_non_neighbor_limit,
            )
            usedcol += summary.colors_consumed_delta

            if view.alive_count == 0:
                lb, ub = temp_lb, temp_ub
                empty_witness = (Coloring.empty(base.n), len(trace), usedcol)
                break
            if summary.removed_total > 0 or temp_lb > lb or temp_ub < ub:
                lb, ub = temp_lb, temp_ub
            else:
                members = find_independent_set(view, round_index, rng)
                trace.append(ExtractedClass(tuple(int(v) for v in members)))
                view.delete_many(members)
                usedcol += 1
                extractions += 1
                if view.alive_count == 0:
                    # defensive: an extracted set leaves its neighbors alive,
                    # so this only fires if the pass structure ever changes
                    empty_witness = (Coloring.empty(base.n), len(trace), usedcol)
                    break

        # reconstruct the round's best candidate into a full proper coloring
        candidates = [w for w in (best_witness, empty_witness) if w is not None]
        candidates = [w for w in candidates if w[2] < ans or best_coloring is None]
        round_best: Coloring | None = None
        for kernel_coloring, prefix_len, _nominal in candidates:
            full = reconstruct(base, trace.prefix(prefix_len), kernel_coloring)
            if round_best is None or full.k < round_best.k:
                round_best = full
        if round_best is not None:
            if best_coloring is None or round_best.k < ans:
                ans = round_best.k
                best_coloring = round_best
                time_to_best = time.monotonic() - start
            if empty_witness is not None:
                ub = min(ub, round_best.k)

        if extractions == 0:
            # without extractions, committed classes are exact, so this
            # round's lb bounds the true chromatic number from below
            proven_lb = max(proven_lb, lb)
            have_proven_round = True

        degree, dominate, crown1, crown2, indset, classes, extracted = _tally_rules(
            trace.events
        )
        trajectory.append(
            RoundRecord(
                index=round_index,
                lb=lb,
                ub=ub,
                kernel_size=view.alive_count,
                wall_time_s=time.monotonic() - start,
                removed_degree=degree,
                removed_dominate=dominate,
                removed_crown1=crown1,
                removed_crown2=crown2,
                removed_indset=indset,
                extracted_classes=classes,
                extracted_vertices=extracted,
            )
        )

        if best_coloring is not None and proven_lb >= ans:
            break
        if config.max_rounds is not None and round_index >= config.max_rounds:
            break
        if time.monotonic() >= deadline:
            break

    if best_coloring is None:
        raise InternalInvariantError("no witness coloring was produced")
    return SolveResult(
        ans=ans,
        best_coloring=best_coloring,
        rounds=round_index,
        trajectory=trajectory,
        seed=config.seed,
        proven_lower_bound=proven_lb if have_proven_round else None,
        time_to_best_s=time_to_best,
        wall_time_s=time.monotonic() - start,
    )


def warmup() -> None:
    """Force JIT compilation of the numeric cores on a tiny instance.

    First-ever use on a machine compiles for tens of seconds; afterwards
    the on-disk cache makes this near-instant. Call it before timing runs.
    """
    from .graph import build_graph

    edges = [(i, (i + 1) % 5) for i in range(5)] + [(5, 0)]
    g = build_graph(7, edges)  # odd cycle, pendant, isolated vertex
    solve(g, SolverConfig(time_limit=5.0, max_rounds=3))


def best_coloring_certificate(result: SolveResult, base: Graph) -> Coloring:
    """Return the stored witness after re-verifying it is proper, covers
    the graph, and uses exactly ``ans`` colors."""
    coloring = result.best_coloring
    if coloring.n != base.n or not coloring.covers_all:
        raise InternalInvariantError("witness does not cover the graph")
    if coloring.k != result.ans:
        raise InternalInvariantError("witness color count disagrees with ans")
    if not is_proper(base, coloring):
        raise InternalInvariantError("witness coloring is not proper")
    return coloring
