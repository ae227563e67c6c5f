import numpy as np
import pytest

from conftest import complete_tripartite_222, cycle_graph
from hamforce import (
    Graph,
    bc_closure,
    close,
    complete_graph,
    enumerate_cycles,
    gen_complete_bipartite,
    gen_phi1,
    gen_random_otg,
    is_hforce,
    min_hforce,
    verify_trace,
    weak_closure,
)


class TestClose:
    def test_k33_above_every_degree_sum_is_a_fixpoint(self):
        trace = close(gen_complete_bipartite(3), 7)
        assert trace.added_edges == ()
        assert trace.result == gen_complete_bipartite(3)

    def test_k33_at_threshold_six_completes(self):
        # the six within-part pairs all have degree sum 6, and additions
        # only push degrees up, so the closure fills in exactly those six
        trace = close(gen_complete_bipartite(3), 6)
        assert trace.result == complete_graph(6)
        assert len(trace.added_edges) == 6

    def test_tripartite_weak_closure_completes(self):
        trace = close(complete_tripartite_222(), 7)
        assert trace.result == complete_graph(6)
        assert len(trace.added_edges) == 3

    def test_threshold_below_one_rejected(self):
        with pytest.raises(ValueError):
            close(cycle_graph(5), 0)


class TestNamedThresholds:
    def test_weak_closure_c5_unchanged(self):
        assert weak_closure(cycle_graph(5)).added_edges == ()

    def test_weak_closure_complete_graph_unchanged(self):
        assert weak_closure(complete_graph(5)).added_edges == ()

    def test_weak_closure_tripartite_completes(self):
        assert weak_closure(complete_tripartite_222()).result == complete_graph(6)

    def test_bc_closure_c5_unchanged(self):
        assert bc_closure(cycle_graph(5)).added_edges == ()

    def test_bc_closure_of_two_small_cliques_under_apexes(self):
        # K2 v (K2 + K2): the cross-block pairs have degree sum 3 + 3 = 6
        assert bc_closure(gen_phi1(6, 2)).result == complete_graph(6)

    @pytest.mark.parametrize("seed", range(8))
    def test_bc_closure_of_any_otg_completes(self, seed):
        g = gen_random_otg(5 + seed, seed)
        assert bc_closure(g).result.is_complete()


class TestTraceInvariants:
    @pytest.mark.parametrize("seed", range(10))
    def test_traces_replay(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(4, 11))
        g = gen_random_otg(n, seed + 100)
        for threshold in (n - 1, n, n + 1, n + 2):
            verify_trace(g, close(g, threshold))

    def test_monotone_in_threshold_and_input(self):
        g = gen_random_otg(9, 3)
        previous = None
        for threshold in (12, 11, 10, 9, 8):
            result = close(g, threshold).result
            assert set(g.edges()) <= set(result.edges())
            if previous is not None:
                assert set(previous.edges()) <= set(result.edges())
            previous = result

    @pytest.mark.parametrize("seed", range(6))
    def test_result_is_a_fixpoint(self, seed):
        g = gen_random_otg(8, seed)
        trace = weak_closure(g)
        assert close(trace.result, trace.threshold).added_edges == ()


class TestOrderIndependence:
    @pytest.mark.parametrize("seed", range(10))
    def test_random_processing_orders_agree(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(5, 11))
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        g = Graph(n, edges)
        threshold = int(rng.integers(n - 1, n + 3))
        reference = set(close(g, threshold).result.edges())
        for k in range(20):
            shuffled = close(g, threshold, rng=np.random.default_rng(1000 * seed + k))
            assert set(shuffled.result.edges()) == reference
            verify_trace(g, shuffled)


def _minimum_force_sets(g):
    """All minimum forcing sets, straight from the cycle enumeration."""
    n = g.n
    full = (1 << n) - 1
    masks = []
    for c in enumerate_cycles(g):
        if len(c) < n:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(full ^ m)
    h = min_hforce(g).min_h
    from itertools import combinations

    found = set()
    for xs in combinations(range(n), h):
        xmask = 0
        for v in xs:
            xmask |= 1 << v
        if all(xmask & m for m in masks):
            found.add(frozenset(xs))
    return found


class TestForcingSetsSurviveQualifyingEdges:
    def test_adding_a_qualifying_edge_preserves_minimum_sets(self):
        checked = 0
        seed = 0
        while checked < 12 and seed < 300:
            seed += 1
            n = 5 + seed % 4
            g = gen_random_otg(n, seed)
            deg = g.degrees()
            pairs = [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if not g.has_edge(u, v) and int(deg[u] + deg[v]) >= n + 1
            ]
            if not pairs:
                continue
            u, v = pairs[0]
            g2 = g.add_edge(u, v)
            assert min_hforce(g).min_h == min_hforce(g2).min_h
            assert _minimum_force_sets(g) == _minimum_force_sets(g2)
            assert is_hforce(g2, min_hforce(g).min_set)
            checked += 1
        assert checked == 12
