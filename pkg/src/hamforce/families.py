"""Deterministic constructors for the named graph families, plus a
seeded random sampler of graphs satisfying Ore's condition.

Vertex layout is fixed per family so tests can reference concrete
labels: clique blocks come first and dominating (apex) vertices last,
independent sets come before the cliques that dominate them, and join
constructions list the Z part before the clique part.
"""

from __future__ import annotations

import numpy as np

from .classify import _two_clique_split, balanced_bipartite_parts
from .graph import Graph
from .ore import check_otg

__all__ = [
    "complete_graph",
    "gen_complete_bipartite",
    "gen_g21",
    "gen_phi1",
    "gen_phi3_regular",
    "gen_psi",
    "gen_random_otg",
]


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def _clique_edges(vertices) -> list[tuple[int, int]]:
    vs = list(vertices)
    return [(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs))]


def _join_edges(left, right) -> list[tuple[int, int]]:
    return [(u, v) for u in left for v in right]


def gen_phi1(n: int, m: int) -> Graph:
    """Two adjacent dominating vertices over disjoint cliques K_m and
    K_{n-m-2}: vertices 0..m-1 form the first clique, m..n-3 the second,
    and n-2, n-1 are the dominating pair."""
    if n < 5:
        raise ValueError(f"need n >= 5, got {n}")
    if not 1 <= m < n / 2:
        raise ValueError(f"need 1 <= m < n/2, got m={m} for n={n}")
    if n - m - 2 < 1:
        raise ValueError(f"second clique would be empty: n={n}, m={m}")
    block_a = range(m)
    block_b = range(m, n - 2)
    apexes = [n - 2, n - 1]
    edges = _clique_edges(block_a) + _clique_edges(block_b) + _clique_edges(apexes)
    edges += _join_edges(apexes, range(n - 2))
    return Graph(n, edges)


def gen_g21(m: int) -> Graph:
    """Dominating clique K_{m+1} over an independent set of the same
    size (n = 2m + 2): vertices 0..m are independent, m+1..n-1 the clique."""
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    n = 2 * m + 2
    indep = range(m + 1)
    clique = range(m + 1, n)
    return Graph(n, _clique_edges(clique) + _join_edges(clique, indep))


def gen_complete_bipartite(k: int) -> Graph:
    """K_{k,k} with parts 0..k-1 and k..2k-1."""
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    return Graph(2 * k, _join_edges(range(k), range(k, 2 * k)))


def gen_psi(m: int, z_edges) -> Graph:
    """The odd-order non-Hamiltonian family Z_m joined to m + 1 isolated
    vertices (n = 2m + 1).

    Vertices 0..m-1 carry Z with exactly the given internal edges; the
    remaining m + 1 vertices are pairwise nonadjacent and adjacent to
    all of Z.  With one more independent vertex than Z can separate, no
    spanning cycle exists, yet every nonadjacent pair still has degree
    sum >= n - 1.
    """
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    n = 2 * m + 1
    inner = []
    for u, v in z_edges:
        u, v = int(u), int(v)
        if not (0 <= u < m and 0 <= v < m):
            raise ValueError(f"z_edges must join two of the first {m} vertices, got ({u}, {v})")
        if u == v:
            raise ValueError(f"self-loop at vertex {u} in z_edges")
        inner.append((u, v))
    return Graph(n, inner + _join_edges(range(m), range(m, n)))


def gen_phi3_regular(n: int, m: int, z_edges) -> Graph:
    """Join of a graph Z on n - m vertices with K_m where every Z vertex
    ends at total degree exactly n/2.

    Vertices 0..n-m-1 carry Z, the rest the clique.  Two members of the
    join family are excluded because their forcing number is not n: the
    balanced complete bipartite graph and the two-equal-cliques shape
    under a dominating pair.  Either collision raises ValueError, as
    does any Z vertex missing internal degree n/2 - m.
    """
    if n < 4 or n % 2:
        raise ValueError(f"need even n >= 4, got {n}")
    if not 0 <= m < n / 2:
        raise ValueError(f"need 0 <= m < n/2, got m={m} for n={n}")
    zcount = n - m
    inner = []
    for u, v in z_edges:
        u, v = int(u), int(v)
        if not (0 <= u < zcount and 0 <= v < zcount):
            raise ValueError(f"z_edges must join two of the first {zcount} vertices, got ({u}, {v})")
        if u == v:
            raise ValueError(f"self-loop at vertex {u} in z_edges")
        inner.append((u, v))
    clique = range(zcount, n)
    g = Graph(n, inner + _clique_edges(clique) + _join_edges(range(zcount), clique))
    deg = g.degrees()
    for v in range(zcount):
        if deg[v] != n // 2:
            raise ValueError(
                f"degree condition violated: vertex {v} has degree {int(deg[v])}, want {n // 2}"
            )
    if balanced_bipartite_parts(g) is not None:
        raise ValueError("excluded graph: balanced complete bipartite")
    fullset = np.flatnonzero(deg == n - 1)
    if fullset.size == 2:
        pair = frozenset(int(v) for v in fullset)
        comps = _two_clique_split(g, pair)
        if comps is not None and comps[0].size == comps[1].size:
            raise ValueError("excluded graph: two equal cliques under a dominating pair")
    return g


def gen_random_otg(n: int, seed: int) -> Graph:
    """A seeded random graph repaired until it satisfies Ore's condition.

    Starts from edge probability 1/2, then repeatedly joins the
    violating nonadjacent pair with the smallest degree sum (ties
    lexicographic) until no violation remains.  Every addition raises
    two degrees, so the loop terminates; the result is deterministic per
    (n, seed).
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    rng = np.random.default_rng(seed)
    adj = np.zeros((n, n), dtype=bool)
    iu = np.triu_indices(n, 1)
    adj[iu] = rng.random(iu[0].size) < 0.5
    adj |= adj.T
    triu = np.triu(np.ones((n, n), dtype=bool), 1)
    while True:
        deg = adj.sum(axis=1)
        sums = deg[:, None] + deg[None, :]
        viol = (~adj) & (sums < n) & triu
        if not viol.any():
            break
        us, vs = np.nonzero(viol)
        k = int(np.argmin(sums[us, vs]))
        u, v = int(us[k]), int(vs[k])
        adj[u, v] = adj[v, u] = True
    g = Graph._from_matrix(adj)
    assert check_otg(g).is_otg
    return g
