"""Independent correctness oracles for tests and the CLI --verify flag.

Deliberately shares no algorithms with the solver: properness is a plain
edge scan, the chromatic number comes from iterative-deepening k-coloring
backtracking seeded with an exact clique, and the clique number from
exhaustive expansion. The brute-force routines refuse graphs with more
than 16 vertices.
"""

from __future__ import annotations

import numpy as np

from .coloring import Coloring
from .graph import Graph

_MAX_ORACLE_N = 16


def verify_coloring(g: Graph, coloring: Coloring) -> bool:
    """True iff the coloring is proper. Requires every vertex colored."""
    if coloring.n != g.n:
        raise ValueError("coloring sized for a different graph")
    if not coloring.covers_all:
        raise ValueError("verify_coloring requires a coloring of all vertices")
    eu, ev = g.edge_arrays()
    return bool((coloring.assignment[eu] != coloring.assignment[ev]).all())


def _require_small(g: Graph) -> None:
    if g.n > _MAX_ORACLE_N:
        raise ValueError(f"oracle limited to n <= {_MAX_ORACLE_N}, got n = {g.n}")


def _adjacency_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u in range(g.n):
        for v in g.neighbors(u):
            masks[u] |= 1 << int(v)
    return masks


def _max_clique_vertices(masks: list[int], n: int) -> list[int]:
    best: list[int] = []

    def expand(current: list[int], cand: int) -> None:
        nonlocal best
        if cand == 0:
            if len(current) > len(best):
                best = current.copy()
            return
        while cand:
            if len(current) + bin(cand).count("1") <= len(best):
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            current.append(v)
            expand(current, cand & masks[v])
            current.pop()

    if n == 0:
        return []
    expand([], (1 << n) - 1)
    return best


def brute_force_max_clique(g: Graph) -> int:
    """Exact clique number by exhaustive expansion; n <= 16 only."""
    _require_small(g)
    return len(_max_clique_vertices(_adjacency_masks(g), g.n))


def brute_force_coloring(g: Graph) -> Coloring:
    """An optimal proper coloring; n <= 16 only.

    Tries k = clique size, clique size + 1, ... with backtracking; the
    clique is pre-colored to break color symmetry.
    """
    _require_small(g)
    n = g.n
    if n == 0:
        return Coloring.empty(0)
    masks = _adjacency_masks(g)
    clique = _max_clique_vertices(masks, n)
    rest = sorted(
        (v for v in range(n) if v not in set(clique)),
        key=lambda v: (-g.degree(v), v),
    )
    order = clique + rest

    for k in range(max(1, len(clique)), n + 1):
        assignment = [-1] * n
        for i, v in enumerate(clique):
            assignment[v] = i

        def place(idx: int, max_used: int) -> bool:
            if idx == n:
                return True
            v = order[idx]
            forbidden = 0
            for u in g.neighbors(v):
                c = assignment[u]
                if c >= 0:
                    forbidden |= 1 << c
            # trying more than one fresh color only permutes names
            limit = min(k, max_used + 2)
            for c in range(limit):
                if forbidden >> c & 1:
                    continue
                assignment[v] = c
                if place(idx + 1, max(max_used, c)):
                    return True
            assignment[v] = -1
            return False

        if place(len(clique), len(clique) - 1):
            return Coloring(n, np.array(assignment, dtype=np.int64))
    raise AssertionError("unreachable: every graph is n-colorable")


def brute_force_chromatic(g: Graph) -> int:
    """Exact chromatic number; n <= 16 only."""
    return brute_force_coloring(g).k
