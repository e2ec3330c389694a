"""Independent set extraction for stalled rounds.

When no reduction applies and the bounds stop moving, the solver peels an
independent set off the graph, spends one color on it, and keeps reducing.
The extraction greedily takes maximum-degree candidates but skips each
pick with a round-indexed probability, so successive rounds explore
different sets.
"""

from __future__ import annotations

import random

import numpy as np

from . import _kernels
from .graph import SubgraphView


def find_independent_set(
    view: SubgraphView, round_index: int, rng: random.Random
) -> np.ndarray:
    """Extract a nonempty independent set from the alive subgraph.

    Skip probability is (round_index mod 25) / 100. Candidates are taken in
    order of candidate-restricted degree (ties: smaller id); a kept vertex
    drops its neighbors from the candidate pool, a skipped one never
    returns, so maximality is only guaranteed at skip probability zero. If
    every pick was skipped the final one is forced in, since the caller
    unconditionally spends a color on the result.
    """
    if view.alive_count == 0:
        raise ValueError("cannot extract from an empty subgraph")
    p100 = int(round_index) % 25
    return _kernels.extract_independent_set_core(
        view.base.indptr,
        view.base.indices,
        view.alive,
        view.live_degree,
        view.alive_count,
        p100,
        rng.getrandbits(32),
    )
