"""Coloring values: a (possibly partial) assignment of color ids to vertices."""

from __future__ import annotations

from typing import Iterator, Mapping

import numpy as np

from .graph import Graph


class Coloring:
    """Map vertex -> color id in [0, k), stored as a dense array.

    Uncolored vertices carry -1; color ids of the colored set are required
    to be contiguous from 0 so ``k`` doubles as the distinct-color count.
    """

    __slots__ = ("n", "assignment", "k")

    def __init__(self, n: int, assignment: np.ndarray):
        assignment = np.asarray(assignment, dtype=np.int64)
        if assignment.shape != (n,):
            raise ValueError(f"assignment must have shape ({n},)")
        colored = assignment[assignment >= 0]
        if colored.size:
            distinct = np.unique(colored)
            k = int(distinct.size)
            if distinct[0] != 0 or distinct[-1] != k - 1:
                raise ValueError("color ids must be contiguous from 0")
        else:
            k = 0
        self.n = int(n)
        self.assignment = assignment
        self.k = k

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[int, int]) -> "Coloring":
        arr = np.full(n, -1, dtype=np.int64)
        for v, c in mapping.items():
            arr[v] = c
        return cls(n, arr)

    @classmethod
    def empty(cls, n: int) -> "Coloring":
        return cls(n, np.full(n, -1, dtype=np.int64))

    def color_of(self, v: int) -> int | None:
        c = int(self.assignment[v])
        return c if c >= 0 else None

    def vertices(self) -> np.ndarray:
        """Colored vertices, ascending."""
        return np.flatnonzero(self.assignment >= 0)

    @property
    def covers_all(self) -> bool:
        return bool((self.assignment >= 0).all())

    @property
    def classes(self) -> list[np.ndarray]:
        """Partition of the colored vertex set, one array per color id."""
        return [np.flatnonzero(self.assignment == c) for c in range(self.k)]

    def items(self) -> Iterator[tuple[int, int]]:
        for v in self.vertices():
            yield int(v), int(self.assignment[v])

    def as_mapping(self) -> dict[int, int]:
        return dict(self.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.assignment, other.assignment))

    def __repr__(self) -> str:
        return f"Coloring(n={self.n}, k={self.k}, colored={int((self.assignment >= 0).sum())})"


def is_proper(graph: Graph, coloring: Coloring) -> bool:
    """True iff every edge with both endpoints colored is bichromatic."""
    if graph.n != coloring.n:
        raise ValueError("coloring and graph sizes differ")
    eu, ev = graph.edge_arrays()
    cu = coloring.assignment[eu]
    cv = coloring.assignment[ev]
    both = (cu >= 0) & (cv >= 0)
    return bool((cu[both] != cv[both]).all())
