"""Optimality-preserving reduction rules and coloring reconstruction.

Four rules shrink a :class:`~recol.graph.SubgraphView` while an ordered
:class:`ReductionTrace` records enough to extend any proper coloring of
the kernel back to the original graph:

* degree: a vertex with fewer live neighbors than the current lower bound
  can always reuse a color, so it is deleted and reinserted greedily.
* dominate: if every live neighbor of u is also a neighbor of v, u can
  take v's color. Mutually dominating pairs (equal neighborhoods) lose
  exactly one member, never both.
* crown1 / crown2: vertices with at most one (resp. an identical pair of
  two) live non-neighbors come off together with them as one (resp. two)
  dedicated color classes.
* indset: when a vertex plus all its live non-neighbors form an
  independent set, that whole set becomes one dedicated color class.

Replaying the trace in reverse (:func:`reconstruct`) turns a kernel
coloring into a proper coloring of the base graph.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from . import _kernels
from .coloring import Coloring, is_proper
from .graph import Graph, SubgraphView


class ReconstructionError(RuntimeError):
    """A replayed trace or kernel coloring violated its contract."""


class TraceReplayError(RuntimeError):
    """An event's precondition did not hold at replay time."""


@dataclass(frozen=True, slots=True)
class DegreeRemoved:
    u: int
    lb_at_removal: int


@dataclass(frozen=True, slots=True)
class Dominated:
    u: int
    dominator: int


@dataclass(frozen=True, slots=True)
class Crown1:
    members: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class Crown2:
    pair_a: tuple[int, int]
    pair_b: tuple[int, int]


@dataclass(frozen=True, slots=True)
class IndepClass:
    members: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class ExtractedClass:
    members: tuple[int, ...]


ReductionEvent = Union[DegreeRemoved, Dominated, Crown1, Crown2, IndepClass, ExtractedClass]


def color_classes_of(event: ReductionEvent) -> int:
    """Number of new color classes the event commits to."""
    if isinstance(event, Crown2):
        return 2
    if isinstance(event, (Crown1, IndepClass, ExtractedClass)):
        return 1
    return 0


def removed_vertices_of(event: ReductionEvent) -> tuple[int, ...]:
    if isinstance(event, (DegreeRemoved, Dominated)):
        return (event.u,)
    if isinstance(event, Crown2):
        return (*event.pair_a, *event.pair_b)
    return event.members


class ReductionTrace:
    """Ordered, replayable log of reduction events.

    ``colors_consumed`` tracks the color classes implied so far (crown1,
    indset and extraction events one each, crown2 two).
    """

    __slots__ = ("events", "colors_consumed")

    def __init__(self, events: Sequence[ReductionEvent] = ()):
        self.events: list[ReductionEvent] = list(events)
        self.colors_consumed = sum(color_classes_of(e) for e in self.events)

    def append(self, event: ReductionEvent) -> None:
        self.events.append(event)
        self.colors_consumed += color_classes_of(event)

    def prefix(self, length: int) -> "ReductionTrace":
        """Trace holding only the first ``length`` events."""
        return ReductionTrace(self.events[:length])

    def __len__(self) -> int:
        return len(self.events)


def _past(deadline: float | None) -> bool:
    return deadline is not None and time.monotonic() >= deadline


_DEADLINE_CHUNK = 4096


def reduce_degree(
    view: SubgraphView,
    local_lb: int,
    trace: ReductionTrace,
    deadline: float | None = None,
) -> int:
    """Cascade-delete every alive vertex with live degree below the bound.

    ``local_lb`` must lower-bound the chromatic number of the current alive
    subgraph (a clique witness found inside it); values below 1 are
    clamped to 1 since any nonempty graph needs a color.
    """
    threshold = max(1, int(local_lb))
    base = view.base
    seeds = np.flatnonzero(view.alive & (view.live_degree < threshold))
    if seeds.size == 0:
        return 0
    queue = np.empty(base.n, dtype=np.int64)
    queue[: seeds.size] = seeds
    in_queue = np.zeros(base.n, dtype=np.bool_)
    in_queue[seeds] = True
    qhead, qtail = 0, int(seeds.size)
    removed_total = 0
    while qhead < qtail:
        removed, qhead, qtail = _kernels.degree_cascade(
            base.indptr, base.indices, view.alive, view.live_degree,
            threshold, queue, qhead, qtail, in_queue, _DEADLINE_CHUNK,
        )
        view.alive_count -= int(removed.size)
        removed_total += int(removed.size)
        for u in removed:
            trace.append(DegreeRemoved(int(u), threshold))
        if _past(deadline):
            break
    return removed_total


def reduce_dominate(view: SubgraphView, trace: ReductionTrace) -> int:
    """Delete vertices whose live neighborhood is contained in another's.

    Rescans until stable. Strict containment removes the dominated vertex;
    equal neighborhoods remove only the larger id, so a mutually dominating
    pair never loses both members.
    """
    base = view.base
    nbrs: dict[int, set[int]] = {}
    for u in view.alive_vertices():
        row = base.neighbors(u)
        nbrs[int(u)] = set(int(x) for x in row[view.alive[row]])

    def remove(target: int, keeper: int) -> None:
        for w in nbrs[target]:
            nbrs[w].discard(target)
        del nbrs[target]
        view.delete_vertex(target)
        trace.append(Dominated(target, keeper))

    removed = 0
    changed = True
    while changed:
        changed = False
        for u in sorted(nbrs):
            if u not in nbrs:
                continue
            nu = nbrs[u]
            if nu:
                # any dominator of u is adjacent to all of N(u), so it is
                # enough to scan the neighborhood of one member
                anchor = min(nu, key=lambda w: (len(nbrs[w]), w))
                candidates = sorted(nbrs[anchor])
            else:
                candidates = sorted(nbrs)
            for v in candidates:
                if v == u or v not in nbrs or v in nu:
                    continue
                if not nu <= nbrs[v]:
                    continue
                changed = True
                removed += 1
                if nu == nbrs[v] and u < v:
                    remove(v, u)
                else:
                    remove(u, v)
                    break
    return removed


def reduce_crown1(view: SubgraphView, trace: ReductionTrace) -> int:
    """Remove each vertex with at most one live non-neighbor together with
    that non-neighbor as a single fresh color class. Rescans until no
    vertex qualifies, since deletions can create new near-universal ones."""
    removed = 0
    while True:
        hit = False
        nnc = view.alive_count - 1 - view.live_degree
        for u in np.flatnonzero(view.alive & (nnc <= 1)):
            u = int(u)
            if not view.alive[u] or view.non_neighbor_count(u) > 1:
                continue
            members = view.complement_closed_neighborhood(u)
            for w in members:
                view.delete_vertex(int(w))
            trace.append(Crown1(tuple(int(w) for w in members)))
            removed += int(members.size)
            hit = True
        if not hit:
            return removed


def reduce_crown2(view: SubgraphView, trace: ReductionTrace) -> int:
    """Remove adjacent pairs u, v sharing the exact live non-neighbor pair
    {x, y}; classes {u, x} and {v, y} each take a fresh color."""
    base = view.base
    removed = 0
    nnc = view.alive_count - 1 - view.live_degree
    for u in np.flatnonzero(view.alive & (nnc == 2)):
        u = int(u)
        if not view.alive[u] or view.non_neighbor_count(u) != 2:
            continue
        comp = view.complement_closed_neighborhood(u)
        non = [int(w) for w in comp if int(w) != u]
        x, y = non[0], non[1]
        row = base.neighbors(u)
        for v in row[view.alive[row]]:
            v = int(v)
            if view.non_neighbor_count(v) != 2:
                continue
            if base.has_edge(v, x) or base.has_edge(v, y):
                continue
            for w in (u, v, x, y):
                view.delete_vertex(w)
            trace.append(Crown2((u, x), (v, y)))
            removed += 4
            break
    return removed


def reduce_indset(
    view: SubgraphView,
    trace: ReductionTrace,
    non_neighbor_limit: int = 10,
) -> int:
    """Remove a vertex plus all its live non-neighbors as one fresh color
    class whenever that whole set is independent. Gated to vertices with at
    most ``non_neighbor_limit`` non-neighbors to keep the check cheap."""
    removed = 0
    nnc = view.alive_count - 1 - view.live_degree
    for u in np.flatnonzero(view.alive & (nnc <= non_neighbor_limit)):
        u = int(u)
        if not view.alive[u] or view.non_neighbor_count(u) > non_neighbor_limit:
            continue
        members = view.complement_closed_neighborhood(u)
        if not view.is_independent(members):
            continue
        for w in members:
            view.delete_vertex(int(w))
        trace.append(IndepClass(tuple(int(w) for w in members)))
        removed += int(members.size)
    return removed


@dataclass(frozen=True, slots=True)
class FixpointSummary:
    removed_total: int
    colors_consumed_delta: int


def run_fixpoint(
    view: SubgraphView,
    local_lb: int,
    trace: ReductionTrace,
    deadline: float | None = None,
    *,
    domination_vertex_limit: int = 200,
    indset_non_neighbor_limit: int = 10,
) -> FixpointSummary:
    """Apply degree, crown1, crown2, indset and (on small graphs) dominate
    passes until a full sweep removes nothing or the deadline passes.

    The view is always left consistent; hitting the deadline just returns
    partial progress.
    """
    removed_total = 0
    colors_before = trace.colors_consumed
    while True:
        # each committed color class lowers the chromatic number of the
        # remaining graph by exactly one, so the degree bound decays with it
        effective_lb = local_lb - (trace.colors_consumed - colors_before)
        sweep = reduce_degree(view, effective_lb, trace, deadline)
        if not _past(deadline):
            sweep += reduce_crown1(view, trace)
        if not _past(deadline):
            sweep += reduce_crown2(view, trace)
        if not _past(deadline):
            sweep += reduce_indset(view, trace, indset_non_neighbor_limit)
        if not _past(deadline) and 0 < view.alive_count <= domination_vertex_limit:
            sweep += reduce_dominate(view, trace)
        removed_total += sweep
        if sweep == 0 or _past(deadline):
            break
    return FixpointSummary(removed_total, trace.colors_consumed - colors_before)


def reconstruct(base: Graph, trace: ReductionTrace, kernel_coloring: Coloring) -> Coloring:
    """Extend a proper kernel coloring to the whole base graph by replaying
    the trace in reverse.

    Class events (crown1/2, indset, extraction) each take fresh dedicated
    colors; dominated vertices copy their dominator's color; degree-removed
    vertices reuse the smallest color absent from their colored neighbors,
    opening a fresh one only when all are blocked. The result is asserted
    proper before returning.
    """
    if kernel_coloring.n != base.n:
        raise ReconstructionError("kernel coloring sized for a different graph")
    assignment = kernel_coloring.assignment.copy()
    k = kernel_coloring.k
    events = trace.events
    mark = np.full(base.n + 2, -1, dtype=np.int64)
    i = len(events) - 1
    while i >= 0:
        e = events[i]
        if isinstance(e, DegreeRemoved):
            j = i
            while j >= 0 and isinstance(events[j], DegreeRemoved):
                j -= 1
            batch = np.fromiter(
                (events[t].u for t in range(i, j, -1)), dtype=np.int64, count=i - j
            )
            k = int(_kernels.assign_smallest_free(
                base.indptr, base.indices, assignment, batch, k, mark
            ))
            i = j
            continue
        if isinstance(e, Dominated):
            c = assignment[e.dominator]
            if c < 0:
                raise ReconstructionError(
                    f"dominator {e.dominator} uncolored when reinserting {e.u}"
                )
            assignment[e.u] = c
        elif isinstance(e, Crown2):
            assignment[list(e.pair_a)] = k
            assignment[list(e.pair_b)] = k + 1
            k += 2
        else:  # Crown1 / IndepClass / ExtractedClass
            assignment[list(e.members)] = k
            k += 1
        i -= 1

    if (assignment < 0).any():
        raise ReconstructionError("reconstruction left uncovered vertices")
    result = Coloring(base.n, assignment)
    if not is_proper(base, result):
        raise ReconstructionError("reconstructed coloring is not proper")
    return result


def replay_trace(base: Graph, events: Sequence[ReductionEvent]) -> SubgraphView:
    """Re-apply events from a fresh view, checking each one's precondition.

    Used by tests and debugging: raises :class:`TraceReplayError` on the
    first event whose contract does not hold in the replayed state (for
    example a domination event whose dominator is already gone).
    """
    view = SubgraphView(base)

    def live_neighbors(u: int) -> set[int]:
        row = base.neighbors(u)
        return set(int(x) for x in row[view.alive[row]])

    for idx, e in enumerate(events):
        removed = removed_vertices_of(e)
        for w in removed:
            if not view.alive[w]:
                raise TraceReplayError(f"event {idx} removes dead vertex {w}: {e}")
        if isinstance(e, DegreeRemoved):
            if view.live_degree[e.u] >= max(1, e.lb_at_removal):
                raise TraceReplayError(f"event {idx}: degree not below bound: {e}")
        elif isinstance(e, Dominated):
            if not view.alive[e.dominator]:
                raise TraceReplayError(f"event {idx}: dominator already removed: {e}")
            if base.has_edge(e.u, e.dominator):
                raise TraceReplayError(f"event {idx}: dominating pair adjacent: {e}")
            if not live_neighbors(e.u) <= live_neighbors(e.dominator):
                raise TraceReplayError(f"event {idx}: domination does not hold: {e}")
        elif isinstance(e, Crown1):
            if len(e.members) > 2 or not view.is_independent(e.members):
                raise TraceReplayError(f"event {idx}: invalid crown1 class: {e}")
        elif isinstance(e, Crown2):
            u, x = e.pair_a
            v, y = e.pair_b
            if not base.has_edge(u, v) or base.has_edge(u, x) or base.has_edge(v, y):
                raise TraceReplayError(f"event {idx}: invalid crown2 pairs: {e}")
        elif isinstance(e, (IndepClass, ExtractedClass)):
            if not view.is_independent(e.members):
                raise TraceReplayError(f"event {idx}: class not independent: {e}")
        for w in removed:
            view.delete_vertex(w)
    return view
