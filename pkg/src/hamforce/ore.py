"""Ore and Dirac degree conditions, and a constructive Hamiltonian cycle.

A graph on n >= 3 vertices is an OTG (it satisfies Ore's condition)
when every pair of nonadjacent vertices has degree sum at least n; such
graphs are always Hamiltonian.  ``hamiltonian_cycle`` makes that
guarantee effective: it completes the graph with the threshold-n
closure, lays a trivial cycle in the complete graph, then removes the
closure edges in reverse order, repairing the cycle with a crossing-
chord rotation whenever it uses the edge being removed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .closure import bc_closure
from .graph import Graph, InternalInvariantError, canonical_cycle

__all__ = ["NotAnOtgError", "OtgReport", "check_dirac", "check_otg", "hamiltonian_cycle"]


class NotAnOtgError(ValueError):
    """The graph does not satisfy Ore's degree condition."""


@dataclass(frozen=True)
class OtgReport:
    """Outcome of the Ore check.  ``witness`` is a violating nonadjacent
    pair, present exactly when ``is_otg`` is false."""

    is_otg: bool
    witness: tuple[int, int] | None


def check_otg(g: Graph) -> OtgReport:
    """Does every nonadjacent pair have degree sum >= n?

    Returns the lexicographically first violating pair as witness when
    the answer is no.  Graphs on fewer than 3 vertices are rejected.
    """
    n = g.n
    if n < 3:
        raise ValueError(f"too few vertices: need n >= 3, got {n}")
    deg = g.degrees()
    sums = deg[:, None] + deg[None, :]
    bad = np.argwhere(np.triu((~g.adjacency) & (sums < n), 1))
    if bad.size == 0:
        return OtgReport(True, None)
    u, v = bad[0]
    return OtgReport(False, (int(u), int(v)))


def check_dirac(g: Graph) -> bool:
    """Is the minimum degree at least n/2?  Implies the Ore condition."""
    if g.n < 3:
        raise ValueError(f"too few vertices: need n >= 3, got {g.n}")
    return bool(2 * int(g.degrees().min()) >= g.n)


def _rotate_past(path: list[int], adj: np.ndarray) -> list[int]:
    """Given a Hamiltonian path u = p[0], ..., p[-1] = v in the graph
    `adj` where u, v are nonadjacent but deg(u) + deg(v) >= n, return a
    Hamiltonian cycle of `adj` on the same vertices.

    Pick the smallest index j with u ~ p[j+1] and p[j] ~ v; the degree
    sum forces such a j to exist.  Then p[0..j] followed by the reversed
    tail p[-1..j+1] closes into a cycle.
    """
    u, v = path[0], path[-1]
    arr = np.asarray(path)
    s_hits = adj[u][arr[1:]]
    t_hits = adj[arr[:-1], v]
    both = np.flatnonzero(s_hits & t_hits)
    if both.size == 0:
        raise InternalInvariantError(
            "crossing-chord rotation found no pivot; the degree-sum bound should guarantee one"
        )
    j = int(both[0])
    return path[: j + 1] + path[j + 1 :][::-1]


def hamiltonian_cycle(g: Graph) -> tuple[int, ...]:
    """A Hamiltonian cycle of an OTG, in canonical form.

    Unwinds the threshold-n closure: the cycle 0,1,...,n-1 is valid in
    the completed graph, and removing the traced edges newest-first
    keeps a valid Hamiltonian cycle at every stage, because each removed
    pair had degree sum >= n exactly when it was added and the rotation
    in ``_rotate_past`` exploits that.  Deterministic for a given input.
    """
    report = check_otg(g)
    if not report.is_otg:
        u, v = report.witness
        raise NotAnOtgError(
            f"not an OTG: vertices {u} and {v} are nonadjacent with degree sum "
            f"{g.degree(u) + g.degree(v)} < {g.n}"
        )
    n = g.n
    trace = bc_closure(g)
    if not trace.result.is_complete():
        raise InternalInvariantError("threshold-n closure of an OTG must be complete")

    adj = trace.result.adjacency.copy()
    cycle = list(range(n))
    pos = list(range(n))
    for u, v in reversed(trace.added_edges):
        adj[u, v] = adj[v, u] = False
        step = (pos[u] - pos[v]) % n
        if step == 1:
            # v immediately precedes u: walking forward from u ends at v
            path = cycle[pos[u] :] + cycle[: pos[u]]
        elif step == n - 1:
            # u immediately precedes v: walk forward from v, then flip
            path = (cycle[pos[v] :] + cycle[: pos[v]])[::-1]
        else:
            continue  # cycle does not use the removed edge
        cycle = _rotate_past(path, adj)
        for i, w in enumerate(cycle):
            pos[w] = i
    return canonical_cycle(cycle)
