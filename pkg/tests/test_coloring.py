import random

import pytest
from hypothesis import given, settings, strategies as st

from hypchrom import _colorsearch_py
from hypchrom.coloring import (
    ACTIVE_BACKEND,
    AdjacencyGraph,
    ColorSearchState,
    UNCOLORED,
    brute_force_chromatic,
    brute_force_k_colorable,
    chromatic_number,
    find_coloring_reordered,
    greedy_seed_clique,
    minimal_non_k_prefix,
    moser_spindle,
    search_k_coloring,
    smallest_last_order,
    verify_coloring,
)

try:
    from hypchrom import _colorsearch

    HAVE_COMPILED = True
except ImportError:
    HAVE_COMPILED = False


def random_graph(rng, n, p):
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return AdjacencyGraph(n, edges)


graph_strategy = st.builds(
    lambda seed, n, p: random_graph(random.Random(seed), n, p),
    st.integers(0, 10**6),
    st.integers(1, 9),
    st.sampled_from([0.3, 0.5, 0.7]),
)


class TestAdjacencyGraph:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            AdjacencyGraph(3, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            AdjacencyGraph(3, [(0, 3)])

    def test_symmetric_neighbors(self):
        g = AdjacencyGraph(4, [(0, 2), (2, 3)])
        assert g.neighbors[0] == (2,)
        assert g.neighbors[2] == (0, 3)
        assert g.size == 2

    def test_prefix(self):
        g = AdjacencyGraph(5, [(0, 1), (1, 4), (3, 4)])
        sub = g.induced_prefix(4)
        assert sub.n == 4
        assert sub.edges() == [(0, 1)]


class TestAssignPropagate:
    def test_isolated_vertex_no_propagation(self):
        g = AdjacencyGraph(3, [(1, 2)])
        state = ColorSearchState(g, 3)
        assert state.assign_propagate(0, 1)
        assert state.colors[0] == 1
        assert state.forced == 0
        assert state.feasible[1] == 0b111

    def test_triangle_forces_third_color(self):
        g = AdjacencyGraph(3, [(0, 1), (0, 2), (1, 2)])
        state = ColorSearchState(g, 3)
        assert state.assign_propagate(0, 0)
        assert state.assign_propagate(1, 1)
        # vertex 2 now has a singleton feasible set and was force-assigned
        assert state.colors[2] == 2
        assert state.forced >= 1

    def test_spindle_conflict_under_three_colors(self):
        g = moser_spindle()
        state = ColorSearchState(g, 3)
        assert state.assign_propagate(0, 0)
        # forces the rest of the first rhombus
        assert state.assign_propagate(1, 1)
        assert state.colors[2] == 2 and state.colors[3] == 0
        # coloring the second rhombus apex empties a feasible set
        assert not state.assign_propagate(4, 1)

    def test_precondition_violations_reported(self):
        g = AdjacencyGraph(2, [(0, 1)])
        state = ColorSearchState(g, 2)
        assert state.assign_propagate(0, 0)
        with pytest.raises(ValueError):
            state.assign_propagate(0, 1)
        with pytest.raises(ValueError):
            state.assign_propagate(1, 0)  # stripped by propagation

    @given(graph_strategy, st.integers(0, 10**6))
    @settings(max_examples=50, deadline=None)
    def test_rollback_restores_bit_exact(self, g, seed):
        rng = random.Random(seed)
        state = ColorSearchState(g, 4)
        before = state.snapshot()
        mark = state.mark()
        v = rng.randrange(g.n)
        color = rng.randrange(4)
        if state.feasible[v] & (1 << color):
            state.assign_propagate(v, color)
        state.rollback(mark)
        assert state.snapshot() == before


class TestSearch:
    def test_single_vertex_one_color(self):
        g = AdjacencyGraph(1, [])
        coloring, _ = search_k_coloring(g, 1)
        assert coloring == [0]

    def test_edgeless_graph_chromatic_one(self):
        g = AdjacencyGraph(5, [])
        assert chromatic_number(g) == 1

    def test_spindle_not_three_colorable(self):
        g = moser_spindle()
        coloring, _ = search_k_coloring(g, 3)
        assert coloring is None

    def test_spindle_chromatic_four_by_both_methods(self):
        g = moser_spindle()
        assert chromatic_number(g) == 4
        assert brute_force_chromatic(g) == 4

    def test_pipeline_phase_two_graph_chromatic_four(self, g42):
        adj = AdjacencyGraph.from_graph(g42)
        assert chromatic_number(adj) == 4

    def test_rejects_bad_k(self):
        g = AdjacencyGraph(2, [(0, 1)])
        with pytest.raises(ValueError):
            search_k_coloring(g, 0)
        with pytest.raises(ValueError):
            search_k_coloring(g, 33)

    def test_witness_always_verifies(self):
        rng = random.Random(5)
        for _ in range(25):
            g = random_graph(rng, rng.randint(1, 10), 0.5)
            for k in (2, 3, 4):
                coloring, _ = search_k_coloring(g, k)
                if coloring is not None:
                    assert verify_coloring(g, coloring)

    def test_verdict_matches_exhaustive_enumeration(self):
        rng = random.Random(99)
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 10), rng.choice([0.3, 0.5, 0.7]))
            for k in (2, 3, 4):
                coloring, _ = search_k_coloring(g, k)
                assert (coloring is not None) == brute_force_k_colorable(g, k)

    def test_symmetry_break_preserves_verdict(self):
        rng = random.Random(17)
        for _ in range(20):
            g = random_graph(rng, rng.randint(2, 9), 0.5)
            for k in (2, 3, 4):
                with_sb, _ = search_k_coloring(g, k, symmetry_break=True)
                without, _ = search_k_coloring(g, k, symmetry_break=False)
                assert (with_sb is None) == (without is None)

    def test_greedy_seed_clique_on_seed_graph(self, g9):
        adj = AdjacencyGraph.from_graph(g9)
        clique = greedy_seed_clique(adj)
        assert clique[:3] == [0, 1, 2]
        for i in clique:
            for j in clique:
                if i != j:
                    assert j in adj.neighbors[i]


class TestStats:
    def test_stats_sanity(self):
        g = moser_spindle()
        coloring, stats = search_k_coloring(g, 4, symmetry_break=False)
        assert coloring is not None
        assert stats.max_depth <= g.n
        assert stats.nodes_visited >= g.n
        assert stats.forced_assignments >= 0
        assert stats.elapsed >= 0

    def test_unsat_depth_below_order(self):
        g = moser_spindle()
        _, stats = search_k_coloring(g, 3, symmetry_break=False)
        assert stats.max_depth <= g.n


@pytest.mark.skipif(not HAVE_COMPILED, reason="compiled kernel unavailable")
class TestKernelParity:
    def test_backends_agree_bitwise(self):
        rng = random.Random(31337)
        for _ in range(60):
            g = random_graph(rng, rng.randint(1, 10), rng.choice([0.3, 0.5, 0.7]))
            for k in (2, 3, 4):
                fast, fstats = search_k_coloring(g, k, backend=_colorsearch)
                slow, sstats = search_k_coloring(g, k, backend=_colorsearch_py)
                assert fast == slow
                assert (
                    fstats.nodes_visited,
                    fstats.max_depth,
                    fstats.forced_assignments,
                ) == (
                    sstats.nodes_visited,
                    sstats.max_depth,
                    sstats.forced_assignments,
                )

    def test_active_backend_is_compiled(self):
        assert ACTIVE_BACKEND == "compiled"


class TestPrefix:
    def test_odd_cycle_completed_by_last_vertex(self):
        # pentagon plus a pendant path: the cycle closes at vertex 4, so the
        # minimal non-2-colorable prefix is 5
        edges = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (4, 5), (5, 6)]
        g = AdjacencyGraph(7, edges)
        assert minimal_non_k_prefix(g, 2) == 5

    def test_rejects_colorable_graph(self):
        g = AdjacencyGraph(3, [(0, 1), (1, 2)])
        with pytest.raises(ValueError):
            minimal_non_k_prefix(g, 2)

    def test_unsat_monotone_over_prefixes(self):
        rng = random.Random(7)
        for _ in range(10):
            g = random_graph(rng, 9, 0.7)
            coloring, _ = search_k_coloring(g, 2)
            if coloring is not None:
                continue
            m = minimal_non_k_prefix(g, 2)
            below, _ = search_k_coloring(g.induced_prefix(m - 1), 2)
            assert below is not None
            for n in range(m, g.n + 1):
                above, _ = search_k_coloring(g.induced_prefix(n), 2)
                assert above is None


class TestReorderedWitness:
    def test_matches_fixed_order_verdict(self):
        rng = random.Random(8)
        for _ in range(20):
            g = random_graph(rng, rng.randint(1, 9), 0.5)
            for k in (2, 3):
                fixed, _ = search_k_coloring(g, k)
                reordered, _ = find_coloring_reordered(g, k)
                assert (fixed is None) == (reordered is None)
                if reordered is not None:
                    assert verify_coloring(g, reordered)

    def test_smallest_last_is_permutation(self, g42):
        adj = AdjacencyGraph.from_graph(g42)
        order = smallest_last_order(adj)
        assert sorted(order) == list(range(adj.n))
