import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from recol import SubgraphView, find_independent_set
from conftest import empty_graph, path_graph, random_graph, star_graph


class TestDeterministicAtZeroSkip:
    def test_star_takes_center(self):
        view = SubgraphView(star_graph(3))
        out = find_independent_set(view, 0, random.Random(0))
        assert sorted(out.tolist()) == [0]

    def test_path_takes_middle(self):
        view = SubgraphView(path_graph(3))
        out = find_independent_set(view, 0, random.Random(0))
        assert sorted(out.tolist()) == [1]

    def test_edgeless_takes_everything(self):
        view = SubgraphView(empty_graph(5))
        out = find_independent_set(view, 0, random.Random(0))
        assert sorted(out.tolist()) == [0, 1, 2, 3, 4]

    def test_round_25_is_zero_skip_again(self):
        view = SubgraphView(star_graph(4))
        out = find_independent_set(view, 25, random.Random(7))
        assert sorted(out.tolist()) == [0]


def test_empty_view_rejected():
    view = SubgraphView(path_graph(2))
    view.delete_vertex(0)
    view.delete_vertex(1)
    with pytest.raises(ValueError):
        find_independent_set(view, 0, random.Random(0))


class TestInvariants:
    @given(
        st.integers(1, 20),
        st.integers(0, 60),
        st.integers(0, 10**9),
        st.integers(0, 10**9),
    )
    def test_independent_and_nonempty_for_all_rounds_and_seeds(
        self, n, round_index, graph_seed, rng_seed
    ):
        gen = random.Random(graph_seed)
        g = random_graph(n, gen.random(), gen)
        view = SubgraphView(g)
        out = find_independent_set(view, round_index, random.Random(rng_seed))
        assert out.size >= 1
        assert view.is_independent(out.tolist())

    def test_zero_skip_output_is_maximal(self):
        rng = random.Random(37)
        for _ in range(60):
            n = rng.randint(2, 16)
            g = random_graph(n, rng.random(), rng)
            view = SubgraphView(g)
            out = set(find_independent_set(view, 0, random.Random(0)).tolist())
            for u in range(n):
                if u in out:
                    continue
                assert any(g.has_edge(u, v) for v in out), (
                    f"vertex {u} could extend the set"
                )

    def test_respects_alive_mask(self):
        g = star_graph(3)
        view = SubgraphView(g)
        view.delete_vertex(0)
        out = find_independent_set(view, 0, random.Random(0))
        assert sorted(out.tolist()) == [1, 2, 3]

    def test_rounds_diversify(self):
        g = random_graph(30, 0.3, random.Random(3))
        seen = set()
        for round_index in range(25):
            view = SubgraphView(g)
            out = find_independent_set(view, round_index, random.Random(round_index))
            seen.add(tuple(sorted(out.tolist())))
        assert len(seen) >= 2
