"""Shared graph constructions for the test suite."""

from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, settings

from recol import Graph, build_graph

settings.register_profile(
    "recol",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("recol")


def path_graph(k: int) -> Graph:
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> Graph:
    return build_graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def star_graph(leaves: int) -> Graph:
    """Center is vertex 0."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return build_graph(10, outer + inner + spokes)


def mycielski(g: Graph) -> Graph:
    """Mycielski construction: raises the chromatic number by one while
    staying triangle-free. Applied repeatedly from K2 it yields C5, then
    the 11-vertex Groetzsch graph."""
    n = g.n
    eu, ev = g.edge_arrays()
    edges = [(int(u), int(v)) for u, v in zip(eu, ev)]
    new_edges = list(edges)
    for u, v in edges:
        new_edges.append((n + u, v))
        new_edges.append((n + v, u))
    apex = 2 * n
    new_edges.extend((n + i, apex) for i in range(n))
    return build_graph(2 * n + 1, new_edges)


def mycielski_3() -> Graph:
    return mycielski(complete_graph(2))


def mycielski_4() -> Graph:
    return mycielski(mycielski_3())


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return build_graph(n, edges)


@pytest.fixture(scope="session", autouse=True)
def _warm_jit():
    """Compile the numeric cores once so timed tests see warm kernels."""
    import recol

    recol.warmup()
