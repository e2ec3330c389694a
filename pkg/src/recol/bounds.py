"""Fast lower and upper bounds for the chromatic number of the alive subgraph.

The lower bound grows maximal cliques from a small random sample of seed
vertices; upper bounds come from a smallest-last greedy coloring (linear
time, used once on the large unreduced graph) and a randomized DSatur
(used on reduced graphs).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .coloring import Coloring
from .graph import SubgraphView


@dataclass
class CliqueSearchParams:
    """Knobs for the clique lower bound: fraction of vertices used as seeds
    and the number of candidates sampled per growth step."""

    seed_fraction: float = 0.01
    sample_size: int = 64

    def __post_init__(self) -> None:
        if not 0 < self.seed_fraction <= 1:
            raise ValueError("seed_fraction must be in (0, 1]")
        if self.sample_size < 1:
            raise ValueError("sample_size must be at least 1")


@dataclass
class BoundState:
    """Round-level bound bookkeeping. ``lb`` and ``ub`` include the colors
    already committed this round (``usedcol``)."""

    ub: int
    lb: int = 0
    usedcol: int = 0


def find_clique(
    view: SubgraphView,
    lb: int,
    usedcol: int,
    params: CliqueSearchParams,
    rng: random.Random,
) -> tuple[int, np.ndarray]:
    """Grow max(1, floor(seed_fraction * alive)) maximal cliques and return
    (max(lb, best size + usedcol), best clique found).

    A seed is abandoned as soon as clique + candidates + usedcol can no
    longer beat the running lb, so the witness is pairwise adjacent but not
    necessarily maximal.
    """
    if view.alive_count == 0:
        return max(lb, usedcol), np.empty(0, dtype=np.int64)
    n_seeds = max(1, int(params.seed_fraction * view.alive_count))
    new_lb, witness = _kernels.find_clique_core(
        view.base.indptr,
        view.base.indices,
        view.alive,
        view.alive_count,
        n_seeds,
        params.sample_size,
        lb,
        usedcol,
        rng.getrandbits(32),
    )
    return int(new_lb), witness


def degeneracy_color(
    view: SubgraphView, ub: int, usedcol: int
) -> tuple[int, Coloring | None]:
    """Smallest-last greedy coloring of the alive subgraph.

    Peels the vertex with the fewest uncolored alive neighbors (ties:
    smaller id) and colors in reverse peel order, which uses at most
    degeneracy + 1 colors. Aborts with (ub, None) as soon as
    usedcol + colors reaches ub; otherwise returns (usedcol + colors,
    coloring of the alive vertices).
    """
    if view.alive_count == 0:
        if usedcol >= ub:
            return ub, None
        return usedcol, Coloring.empty(view.base.n)
    ok, colors, count = _kernels.degeneracy_color_core(
        view.base.indptr,
        view.base.indices,
        view.alive,
        view.live_degree,
        view.alive_count,
        ub,
        usedcol,
    )
    if not ok:
        return ub, None
    return usedcol + int(count), Coloring(view.base.n, colors)


def dsatur_color(
    view: SubgraphView, ub: int, usedcol: int, rng: random.Random
) -> tuple[int, Coloring | None]:
    """Randomized DSatur on the alive subgraph.

    Picks the uncolored vertex with maximum saturation (ties: larger live
    degree, then smaller id) and gives it a uniformly random feasible
    already-open color, opening a new one only when forced. Early exit
    matches :func:`degeneracy_color`. Deterministic given the rng state.
    """
    if view.alive_count == 0:
        if usedcol >= ub:
            return ub, None
        return usedcol, Coloring.empty(view.base.n)
    ok, colors, count = _kernels.dsatur_color_core(
        view.base.indptr,
        view.base.indices,
        view.alive,
        view.live_degree,
        view.alive_count,
        ub,
        usedcol,
        rng.getrandbits(32),
    )
    if not ok:
        return ub, None
    return usedcol + int(count), Coloring(view.base.n, colors)
