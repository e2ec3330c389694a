"""Static graph storage and vertex-deletion views.

Graphs are stored once in CSR form (sorted adjacency) and never mutated.
Deletions are realized by :class:`SubgraphView`, a boolean "alive" mask
with incrementally maintained live degrees, so resetting to the original
graph is an O(n) operation instead of a rebuild.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import _kernels


class GraphInputError(ValueError):
    """Raised when raw edge input is structurally invalid."""


class Graph:
    """Immutable simple undirected graph over dense vertex ids 0..n-1.

    Adjacency lists are sorted, self-loop free and deduplicated, so
    membership tests are binary searches.
    """

    __slots__ = ("n", "m", "indptr", "indices", "_edge_cache")

    def __init__(self, n: int, m: int, indptr: np.ndarray, indices: np.ndarray):
        self.n = int(n)
        self.m = int(m)
        self.indptr = indptr
        self.indices = indices
        self._edge_cache: tuple[np.ndarray, np.ndarray] | None = None

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def degree(self, u: int) -> int:
        return int(self.indptr[u + 1] - self.indptr[u])

    def neighbors(self, u: int) -> np.ndarray:
        """Sorted neighbor ids of ``u``."""
        return self.indices[self.indptr[u] : self.indptr[u + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        i = np.searchsorted(row, v)
        return bool(i < row.size and row[i] == v)

    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Each undirected edge once, as parallel (u, v) arrays with u < v."""
        if self._edge_cache is None:
            rows = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
            keep = rows < self.indices
            self._edge_cache = (rows[keep], self.indices[keep])
        return self._edge_cache

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Sequence[int]] | np.ndarray) -> Graph:
    """Build a :class:`Graph` from raw edge pairs.

    Self-loops are dropped and duplicate edges (in either orientation)
    collapse to one; ``m`` reflects the cleaned count.  Endpoints outside
    ``[0, n)`` raise :class:`GraphInputError` naming the offending pair.
    """
    if n < 0:
        raise GraphInputError(f"vertex count must be non-negative, got {n}")
    if isinstance(edges, np.ndarray):
        arr = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    else:
        flat = [x for pair in edges for x in pair]
        arr = np.asarray(flat, dtype=np.int64).reshape(-1, 2)

    if arr.size:
        bad = (arr < 0) | (arr >= n)
        if bad.any():
            i = int(np.flatnonzero(bad.any(axis=1))[0])
            u, v = int(arr[i, 0]), int(arr[i, 1])
            raise GraphInputError(
                f"edge ({u}, {v}) has an endpoint outside [0, {n})"
            )

    u, v = arr[:, 0], arr[:, 1]
    keep = u != v
    u, v = u[keep], v[keep]
    lo = np.minimum(u, v)
    hi = np.maximum(u, v)
    if lo.size:
        # n <= 2**31 keeps the pair encoding inside int64
        code = np.unique(lo * np.int64(n) + hi)
        lo = code // n
        hi = code % n
    m = int(lo.size)

    rows = np.concatenate([lo, hi])
    cols = np.concatenate([hi, lo])
    counts = np.bincount(rows, minlength=n) if rows.size else np.zeros(n, dtype=np.int64)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    # single-key sort on packed (row, col); much faster than lexsort here
    order = np.argsort(rows * np.int64(n) + cols) if rows.size else rows
    indices = cols[order]
    return Graph(n, m, indptr, indices)


class SubgraphView:
    """Mutable alive-mask over a base :class:`Graph` with live-degree bookkeeping.

    Single-writer: one view per solver round, never shared across threads.
    """

    __slots__ = ("base", "alive", "live_degree", "alive_count")

    def __init__(self, base: Graph):
        self.base = base
        self.alive = np.ones(base.n, dtype=np.bool_)
        self.live_degree = base.degrees.astype(np.int64)
        self.alive_count = base.n

    def is_alive(self, u: int) -> bool:
        return bool(self.alive[u])

    def _require_alive(self, u: int) -> None:
        if not self.alive[u]:
            raise ValueError(f"vertex {u} is not alive")

    def delete_vertex(self, u: int) -> None:
        """Remove ``u``; decrements the live degree of each alive neighbor."""
        self._require_alive(u)
        self.alive[u] = False
        nbrs = self.base.neighbors(u)
        live = nbrs[self.alive[nbrs]]
        self.live_degree[live] -= 1
        self.alive_count -= 1

    def delete_many(self, vertices: np.ndarray) -> None:
        """Batch form of :meth:`delete_vertex` for large sets."""
        verts = np.asarray(vertices, dtype=np.int64)
        if verts.size == 0:
            return
        if not self.alive[verts].all():
            raise ValueError("delete_many received a dead vertex")
        _kernels.delete_vertices(
            self.base.indptr, self.base.indices, self.alive, self.live_degree, verts
        )
        self.alive_count -= int(verts.size)

    def alive_vertices(self) -> np.ndarray:
        return np.flatnonzero(self.alive)

    def non_neighbor_count(self, u: int) -> int:
        """Number of alive non-neighbors of ``u``, O(1)."""
        self._require_alive(u)
        return int(self.alive_count - 1 - self.live_degree[u])

    def complement_closed_neighborhood(self, u: int) -> np.ndarray:
        """Alive vertices not adjacent to ``u``, plus ``u`` itself.

        Costs a pass over the mask; callers gate on :meth:`non_neighbor_count`.
        """
        self._require_alive(u)
        mask = self.alive.copy()
        mask[self.base.neighbors(u)] = False
        mask[u] = True
        return np.flatnonzero(mask)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        verts = [int(v) for v in vertices]
        if not all(self.alive[v] for v in verts):
            raise ValueError("is_independent requires alive vertices")
        for i in range(len(verts)):
            for j in range(i + 1, len(verts)):
                if self.base.has_edge(verts[i], verts[j]):
                    return False
        return True

    def is_clique(self, vertices: Iterable[int]) -> bool:
        verts = [int(v) for v in vertices]
        if not all(self.alive[v] for v in verts):
            raise ValueError("is_clique requires alive vertices")
        for i in range(len(verts)):
            for j in range(i + 1, len(verts)):
                if not self.base.has_edge(verts[i], verts[j]):
                    return False
        return True


def induced_subgraph(view: SubgraphView) -> tuple[Graph, np.ndarray]:
    """Materialize the alive subgraph with compact ids.

    Returns the new graph and the array mapping new id -> base id.
    """
    verts = view.alive_vertices()
    remap = np.full(view.base.n, -1, dtype=np.int64)
    remap[verts] = np.arange(verts.size, dtype=np.int64)
    eu, ev = view.base.edge_arrays()
    keep = view.alive[eu] & view.alive[ev]
    pairs = np.stack([remap[eu[keep]], remap[ev[keep]]], axis=1)
    return build_graph(int(verts.size), pairs), verts
