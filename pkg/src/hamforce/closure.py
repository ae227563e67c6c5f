"""Degree-sum closures of a graph.

``close(g, t)`` repeatedly joins nonadjacent vertex pairs whose degree
sum is at least ``t`` until no such pair remains.  The result is the
same whatever order the pairs are processed in: degrees only ever grow,
so the first edge that one run adds and another lacks would still have
a qualifying degree sum in the other run's final graph, contradicting
that the other run stopped.  Two thresholds matter in practice:

* ``t = n + 1`` (the weak closure) preserves minimum forcing sets of a
  graph that satisfies Ore's degree condition, and
* ``t = n`` (the Bondy-Chvatal closure) preserves Hamiltonicity and
  turns any Ore graph into the complete graph.

The threshold stays an explicit parameter so tests can probe arbitrary
values.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .graph import Graph

__all__ = ["ClosureTrace", "bc_closure", "close", "verify_trace", "weak_closure"]


@dataclass(frozen=True)
class ClosureTrace:
    """One concrete run of a closure computation.

    ``added_edges`` lists the joined pairs in the order they were added;
    replaying them against the start graph reproduces ``result``.
    """

    threshold: int
    added_edges: tuple[tuple[int, int], ...]
    result: Graph


def close(g: Graph, threshold: int, *, rng: np.random.Generator | None = None) -> ClosureTrace:
    """Join nonadjacent pairs with degree sum >= threshold until none remain.

    By default candidate pairs are processed lexicographically, smallest
    (min endpoint, max endpoint) first, which makes traces reproducible.
    Passing ``rng`` picks pending pairs uniformly at random instead; the
    resulting graph is identical either way, only the trace order moves.

    The pending queue is seeded with every qualifying nonadjacent pair;
    after an edge is added only pairs touching its endpoints can newly
    qualify, so just those two rows are rescanned.  Each pair enters the
    queue at most once, which bounds the whole run by O(n^3).
    """
    if threshold < 1:
        raise ValueError(f"threshold must be >= 1, got {threshold}")
    n = g.n
    adj = g.adjacency.copy()
    deg = g.degrees().astype(np.int64)
    queued = np.zeros((n, n), dtype=bool)

    sums = deg[:, None] + deg[None, :]
    cand = np.triu((~adj) & (sums >= threshold), 1)
    seed_pairs = np.argwhere(cand)
    queued[seed_pairs[:, 0], seed_pairs[:, 1]] = True
    queued[seed_pairs[:, 1], seed_pairs[:, 0]] = True
    pending: list[tuple[int, int]] = [(int(u), int(v)) for u, v in seed_pairs]
    if rng is None:
        heapq.heapify(pending)

    added: list[tuple[int, int]] = []

    def discover(u: int) -> None:
        row = (~adj[u]) & (deg[u] + deg >= threshold) & ~queued[u]
        row[u] = False
        xs = np.flatnonzero(row)
        if xs.size == 0:
            return
        queued[u, xs] = True
        queued[xs, u] = True
        for x in xs.tolist():
            pair = (u, x) if u < x else (x, u)
            if rng is None:
                heapq.heappush(pending, pair)
            else:
                pending.append(pair)

    while pending:
        if rng is None:
            u, v = heapq.heappop(pending)
        else:
            i = int(rng.integers(len(pending)))
            pending[i], pending[-1] = pending[-1], pending[i]
            u, v = pending.pop()
        if adj[u, v]:
            continue
        # Degrees never shrink, so a pair that qualified when queued
        # still qualifies now.
        adj[u, v] = adj[v, u] = True
        deg[u] += 1
        deg[v] += 1
        added.append((u, v))
        discover(u)
        discover(v)

    return ClosureTrace(threshold, tuple(added), Graph._from_matrix(adj))


def weak_closure(g: Graph) -> ClosureTrace:
    """Closure at threshold n + 1."""
    return close(g, g.n + 1)


def bc_closure(g: Graph) -> ClosureTrace:
    """Bondy-Chvatal closure: threshold n."""
    return close(g, g.n)


def verify_trace(start: Graph, trace: ClosureTrace) -> None:
    """Replay a trace against its start graph, raising ValueError on any
    violation: an added pair that was adjacent or under-threshold at its
    turn, a result that differs from the replay, or a result that still
    contains a qualifying nonadjacent pair."""
    adj = start.adjacency.copy()
    deg = start.degrees().astype(np.int64)
    for k, (u, v) in enumerate(trace.added_edges):
        if u == v or adj[u, v]:
            raise ValueError(f"step {k}: pair ({u}, {v}) was not a nonadjacent pair")
        if deg[u] + deg[v] < trace.threshold:
            raise ValueError(
                f"step {k}: degree sum {int(deg[u] + deg[v])} below threshold {trace.threshold}"
            )
        adj[u, v] = adj[v, u] = True
        deg[u] += 1
        deg[v] += 1
    if not np.array_equal(adj, trace.result.adjacency):
        raise ValueError("replaying the added edges does not reproduce the result graph")
    sums = deg[:, None] + deg[None, :]
    open_pairs = np.triu((~adj) & (sums >= trace.threshold), 1)
    if open_pairs.any():
        u, v = np.argwhere(open_pairs)[0]
        raise ValueError(f"result is not closed: ({int(u)}, {int(v)}) still qualifies")
