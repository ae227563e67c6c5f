"""Acceptance suite: every criterion the artifact must meet, one test
per criterion, each printing a single PASS/FAIL line (run with -s to
see them as they happen)."""

import time
from dataclasses import dataclass
from itertools import combinations

import numpy as np
import pytest

from hamforce import (
    PHI1,
    PHI2,
    PHI3,
    Graph,
    classify,
    close,
    complete_graph,
    enumerate_cycles,
    fit_loglog_slope,
    gen_complete_bipartite,
    gen_g21,
    gen_phi1,
    gen_psi,
    gen_random_otg,
    hamiltonian_cycle,
    is_hamiltonian_bf,
    is_hamiltonian_cycle,
    is_hforce,
    min_hforce,
    run_bench,
)


def _report(num, label, body):
    t0 = time.perf_counter()
    try:
        body()
    except BaseException:
        print(f"criterion {num:>2} FAIL ({time.perf_counter() - t0:6.1f}s)  {label}")
        raise
    print(f"criterion {num:>2} PASS ({time.perf_counter() - t0:6.1f}s)  {label}")


def _legal_phi1_ms(n):
    return [m for m in range(1, n) if 1 <= m < n / 2 and n - m - 2 >= 1]


def test_criterion_01_complete_graphs():
    def body():
        t0 = time.perf_counter()
        for n in range(5, 11):
            k = complete_graph(n)
            result = classify(k)
            assert result.h == n and result.phi_class == PHI3
            report = min_hforce(k)
            assert report.min_h == n
        assert time.perf_counter() - t0 < 5.0

    _report(1, "complete graphs: h = n, oracle agrees up to n = 10, < 5 s", body)


def test_criterion_02_complete_bipartite():
    def body():
        t0 = time.perf_counter()
        for k in (3, 4, 5):
            g = gen_complete_bipartite(k)
            result = classify(g)
            assert result.h == k and result.phi_class == PHI2
            parts = (frozenset(range(k)), frozenset(range(k, 2 * k)))
            assert result.hforce_set in parts
            if k in (3, 4):
                report = min_hforce(g)
                assert report.min_h == k
                assert is_hforce(g, result.hforce_set)
        assert time.perf_counter() - t0 < 30.0

    _report(2, "balanced bipartite: h = k and the set is one part, < 30 s", body)


def test_criterion_03_phi1_family():
    def body():
        t0 = time.perf_counter()
        for n in range(5, 11):
            for m in _legal_phi1_ms(n):
                g = gen_phi1(n, m)
                result = classify(g)
                assert result.h == n - 2 and result.phi_class == PHI1, (n, m)
                if n <= 9:
                    assert min_hforce(g).min_h == n - 2, (n, m)
                    assert is_hforce(g, result.hforce_set), (n, m)
        assert time.perf_counter() - t0 < 120.0

    _report(3, "two-cliques-under-a-pair family: h = n - 2, oracle to n = 9, < 2 min", body)


def test_criterion_04_g21_family():
    def body():
        for m in (2, 3, 4):
            g = gen_g21(m)
            result = classify(g)
            assert result.h == m + 1 == g.n // 2 and result.phi_class == PHI2
            if m in (2, 3):
                assert min_hforce(g).min_h == m + 1
                assert is_hforce(g, result.hforce_set)

    _report(4, "dominating-clique family: h = n/2, oracle for m in {2, 3}", body)


@dataclass
class _Instance:
    graph: Graph
    result: object
    report: object


@pytest.fixture(scope="module")
def random_otg_bank():
    t0 = time.perf_counter()
    bank = []
    for seed in range(200):
        n = 5 + seed % 6
        g = gen_random_otg(n, seed)
        bank.append(_Instance(g, classify(g), min_hforce(g)))
    return bank, time.perf_counter() - t0


def test_criterion_05_trichotomy_and_oracle_equivalence(random_otg_bank):
    bank, build_time = random_otg_bank

    def body():
        t0 = time.perf_counter()
        for inst in bank:
            n = inst.graph.n
            h = inst.result.h
            assert h in {n - 2, n / 2, n}
            assert h == inst.report.min_h
            assert is_hforce(inst.graph, inst.result.hforce_set)
            # exhaustively: no set one smaller hits every complement
            full = (1 << n) - 1
            masks = []
            for c in inst.report.nonhamiltonian_cycles:
                m = 0
                for v in c:
                    m |= 1 << v
                masks.append(full ^ m)
            if h > 1:
                for xs in combinations(range(n), h - 1):
                    xmask = 0
                    for v in xs:
                        xmask |= 1 << v
                    assert not all(xmask & m for m in masks)
        assert build_time + (time.perf_counter() - t0) < 600.0

    _report(5, "200 random OTGs: trichotomy, oracle equality, minimality, < 10 min", body)


def test_criterion_06_closure_well_definedness():
    def body():
        for seed in range(50):
            rng = np.random.default_rng(seed)
            n = int(rng.integers(5, 11))
            edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
            g = Graph(n, edges)
            threshold = int(rng.integers(n - 1, n + 3))
            reference = set(close(g, threshold).result.edges())
            for k in range(50):
                order_rng = np.random.default_rng(10_000 * seed + k)
                assert set(close(g, threshold, rng=order_rng).result.edges()) == reference

    _report(6, "closure: 50 graphs x 50 processing orders, identical edge sets", body)


def test_criterion_07_qualifying_edge_preserves_min_h():
    def body():
        checked = 0
        seed = 0
        while checked < 50:
            seed += 1
            assert seed < 2000, "could not find enough graphs with a qualifying pair"
            n = 5 + seed % 5  # n in 5..9
            g = gen_random_otg(n, 31_000 + seed)
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
            assert min_hforce(g).min_h == min_hforce(g.add_edge(u, v)).min_h
            checked += 1

    _report(7, "adding a degree-sum >= n+1 edge never moves the oracle minimum (50 graphs)", body)


def test_criterion_08_psi_exceptions():
    def body():
        for m in (2, 3, 4):
            z_variants = [
                [],
                [(i, j) for i in range(m) for j in range(i + 1, m)],
                [(i, i + 1) for i in range(m - 1)],
            ]
            for z_edges in z_variants:
                g = gen_psi(m, z_edges)
                n = g.n
                assert n == 2 * m + 1
                assert not is_hamiltonian_bf(g)
                deg = g.degrees()
                for u in range(n):
                    for v in range(u + 1, n):
                        if not g.has_edge(u, v):
                            assert int(deg[u] + deg[v]) >= n - 1

    _report(8, "odd-order exception family: non-Hamiltonian, degree sums >= n - 1", body)


def test_criterion_09_constructive_hamiltonicity():
    def body():
        t0 = time.perf_counter()
        sizes = np.linspace(10, 300, 100).astype(int)
        for i, n in enumerate(sizes):
            g = gen_random_otg(int(n), 77_000 + i)
            cycle = hamiltonian_cycle(g)  # raises internally if a rotation pivot is missing
            assert is_hamiltonian_cycle(g, cycle)
        assert time.perf_counter() - t0 < 60.0

    _report(9, "100 random OTGs up to n = 300: constructed cycles all valid, < 60 s", body)


def test_criterion_10_cubic_runtime_bound():
    def body():
        rows = run_bench(400, 3, seed=1)
        slope = fit_loglog_slope(rows, min_n=50)
        big = [r for r in rows if r.n == 400]
        assert big and big[0].median_ns < 10 * 10**9
        assert slope <= 3.3, f"log-log slope {slope:.3f} exceeds 3.3"

    _report(10, "classification scaling: log-log slope <= 3.3 on [50, 400], n=400 < 10 s", body)


def test_criterion_11_forcing_sets_hit_every_cycle_complement(random_otg_bank):
    bank, _ = random_otg_bank

    def body():
        for inst in bank:
            n = inst.graph.n
            everything = frozenset(range(n))
            for c in enumerate_cycles(inst.graph):
                if len(c) < n:
                    assert inst.result.hforce_set & (everything - frozenset(c))

    _report(11, "returned sets intersect the complement of every short cycle", body)
