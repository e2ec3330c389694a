import random

import pytest

from recol import (
    Coloring,
    brute_force_chromatic,
    brute_force_coloring,
    brute_force_max_clique,
    build_graph,
    verify_coloring,
)
from conftest import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    mycielski_3,
    mycielski_4,
    path_graph,
    petersen_graph,
    random_graph,
    star_graph,
)


class TestVerifyColoring:
    def test_accepts_proper(self):
        g = path_graph(3)
        assert verify_coloring(g, Coloring.from_mapping(3, {0: 0, 1: 1, 2: 0}))

    def test_rejects_shared_color_on_edge(self):
        g = complete_graph(3)
        assert not verify_coloring(g, Coloring.from_mapping(3, {0: 0, 1: 0, 2: 1}))

    def test_edgeless_any_coloring(self):
        g = empty_graph(4)
        assert verify_coloring(g, Coloring.from_mapping(4, {0: 0, 1: 0, 2: 0, 3: 0}))

    def test_requires_full_cover(self):
        g = path_graph(3)
        with pytest.raises(ValueError):
            verify_coloring(g, Coloring.from_mapping(3, {0: 0}))


class TestChromatic:
    def test_known_values(self):
        assert brute_force_chromatic(cycle_graph(5)) == 3
        assert brute_force_chromatic(complete_graph(4)) == 4
        assert brute_force_chromatic(empty_graph(7)) == 1
        assert brute_force_chromatic(path_graph(6)) == 2
        assert brute_force_chromatic(star_graph(5)) == 2
        assert brute_force_chromatic(complete_bipartite(3, 3)) == 2

    def test_cycles(self):
        for k in (4, 6, 8):
            assert brute_force_chromatic(cycle_graph(k)) == 2
        for k in (3, 5, 7, 9):
            assert brute_force_chromatic(cycle_graph(k)) == 3

    def test_triangle_free_towers(self):
        assert brute_force_chromatic(petersen_graph()) == 3
        assert brute_force_chromatic(mycielski_3()) == 3
        assert brute_force_chromatic(mycielski_4()) == 4

    def test_refuses_large(self):
        with pytest.raises(ValueError):
            brute_force_chromatic(empty_graph(17))

    def test_optimal_coloring_is_proper(self):
        rng = random.Random(11)
        for _ in range(40):
            g = random_graph(rng.randint(1, 9), rng.random(), rng)
            col = brute_force_coloring(g)
            assert col.covers_all
            assert verify_coloring(g, col)
            assert col.k == brute_force_chromatic(g)


class TestMaxClique:
    def test_known_values(self):
        assert brute_force_max_clique(cycle_graph(5)) == 2
        assert brute_force_max_clique(complete_graph(4)) == 4
        assert brute_force_max_clique(petersen_graph()) == 2
        assert brute_force_max_clique(empty_graph(3)) == 1
        assert brute_force_max_clique(build_graph(1, [])) == 1

    def test_refuses_large(self):
        with pytest.raises(ValueError):
            brute_force_max_clique(empty_graph(17))

    def test_clique_bounds_chromatic(self):
        rng = random.Random(5)
        for _ in range(60):
            g = random_graph(rng.randint(1, 9), rng.random(), rng)
            assert brute_force_max_clique(g) <= brute_force_chromatic(g)

    def test_planted_clique_found(self):
        rng = random.Random(13)
        for _ in range(20):
            n = rng.randint(6, 11)
            size = rng.randint(2, n - 1)
            members = rng.sample(range(n), size)
            extra = [
                (i, j)
                for i in range(n)
                for j in range(i + 1, n)
                if rng.random() < 0.2
            ]
            planted = [(u, v) for u in members for v in members if u < v]
            g = build_graph(n, extra + planted)
            assert brute_force_max_clique(g) >= size
