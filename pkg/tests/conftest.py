"""Shared graph builders for the test suite."""

from hamforce import Graph


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def k4_minus_edge():
    # K4 on 0..3 without the edge (2, 3); the degree-2 vertices are 2 and 3
    return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def complete_tripartite_222():
    parts = [(0, 1), (2, 3), (4, 5)]
    edges = []
    for i, p in enumerate(parts):
        for q in parts[i + 1 :]:
            edges += [(u, v) for u in p for v in q]
    return Graph(6, edges)


def petersen():
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))        # outer 5-cycle
        edges.append((i, i + 5))              # spokes
        edges.append((i + 5, (i + 2) % 5 + 5))  # inner pentagram
    return Graph(10, edges)


def prism():
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def wheel(rim):
    """Hub vertex `rim` joined to the cycle 0..rim-1."""
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    return Graph(rim + 1, edges)
