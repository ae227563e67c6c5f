"""Forcing-number classification of graphs satisfying Ore's condition.

For an OTG on n >= 5 vertices the minimum forcing set survives the
threshold-(n+1) closure unchanged, and the closure's degree profile
pins the forcing number h to one of exactly three values:

* ``h = n - 2`` when the closure consists of two dominating adjacent
  vertices over a disjoint pair of cliques (class PHI1);
* ``h = n / 2`` when the closure is a dominating clique over an equally
  large independent set, or a balanced complete bipartite graph (PHI2);
* ``h = n`` otherwise, including every complete closure (PHI3).

``classify`` reads those shapes off the closure in O(n^2) after the
O(n^3) closure itself, so the whole pipeline is O(n^3).  Graphs on 3 or
4 vertices fall outside the trichotomy (the 4-cycle has h = 1) and are
delegated to the brute-force oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .closure import ClosureTrace, weak_closure
from .graph import Graph, InternalInvariantError, complement_components
from .oracle import min_hforce
from .ore import NotAnOtgError, check_otg

__all__ = [
    "PHI1",
    "PHI2",
    "PHI3",
    "SMALL_N_FALLBACK",
    "HForceResult",
    "classify",
    "recognize_two_cliques",
    "small_n_fallback",
]

PHI1 = "PHI1"
PHI2 = "PHI2"
PHI3 = "PHI3"
SMALL_N_FALLBACK = "SMALL_N_FALLBACK"


@dataclass(frozen=True)
class HForceResult:
    """Forcing number, one minimum forcing set, the closure-shape label,
    and the closure trace the answer was read from."""

    h: int
    hforce_set: frozenset[int]
    phi_class: str
    closure: ClosureTrace


def _components_within(g: Graph, keep: np.ndarray) -> list[np.ndarray]:
    """Connected components of the subgraph induced by the `keep` mask."""
    adj = g.adjacency
    seen = ~keep.copy()
    comps = []
    for s in np.flatnonzero(keep):
        if seen[s]:
            continue
        members = np.zeros(g.n, dtype=bool)
        members[s] = True
        frontier = members.copy()
        while frontier.any():
            frontier = adj[frontier].any(axis=0) & keep & ~members
            members |= frontier
        seen |= members
        comps.append(np.flatnonzero(members))
    return comps


def _two_clique_split(g: Graph, exclude: frozenset[int]) -> list[np.ndarray] | None:
    """The two clique components of g minus `exclude`, or None."""
    keep = np.ones(g.n, dtype=bool)
    keep[list(exclude)] = False
    comps = _components_within(g, keep)
    if len(comps) != 2:
        return None
    adj = g.adjacency
    for comp in comps:
        block = adj[np.ix_(comp, comp)]
        if not (block | np.eye(comp.size, dtype=bool)).all():
            return None
    return comps


def recognize_two_cliques(g: Graph, exclude) -> bool:
    """Is g minus the two `exclude` vertices a disjoint union of exactly
    two nonempty cliques?"""
    ex = frozenset(int(v) for v in exclude)
    if len(ex) != 2:
        raise ValueError(f"exclude must contain exactly 2 vertices, got {sorted(ex)}")
    if any(not 0 <= v < g.n for v in ex):
        raise ValueError("exclude vertex out of range")
    return _two_clique_split(g, ex) is not None


def balanced_bipartite_parts(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """The two parts of g if it is a balanced complete bipartite graph.

    Test: the complement must fall apart into exactly two equal halves
    that are independent in g (equivalently, cliques of the complement).
    """
    n = g.n
    if n % 2:
        return None
    comps = complement_components(g)
    if len(comps) != 2 or any(len(c) != n // 2 for c in comps):
        return None
    adj = g.adjacency
    for part in comps:
        idx = sorted(part)
        if adj[np.ix_(idx, idx)].any():
            return None
    return comps[0], comps[1]


def small_n_fallback(g: Graph) -> HForceResult:
    """Oracle-backed answer for OTGs on 3 or 4 vertices.

    The trichotomy genuinely fails here: the 4-cycle has no
    non-Hamiltonian cycle at all, so any single vertex already forces.
    """
    if g.n not in (3, 4):
        raise ValueError(f"fallback handles n in {{3, 4}}, got n={g.n}")
    report = check_otg(g)
    if not report.is_otg:
        raise NotAnOtgError(f"not an OTG: witness pair {report.witness}")
    oracle = min_hforce(g)
    return HForceResult(oracle.min_h, oracle.min_set, SMALL_N_FALLBACK, weak_closure(g))


def _check_dominated_independent(gw: Graph, low: np.ndarray) -> None:
    # The below-full-degree vertices of this closure shape must be an
    # independent set of degree exactly n/2 each; anything else means a
    # bug upstream, not unusual input.
    if gw.adjacency[np.ix_(low, low)].any():
        raise InternalInvariantError("low-degree vertices of a half-full closure must be independent")
    if not np.all(gw.degrees()[low] == gw.n // 2):
        raise InternalInvariantError("low-degree vertices of a half-full closure must have degree n/2")


def classify(g: Graph) -> HForceResult:
    """Forcing number, one minimum forcing set, and shape class of an OTG.

    Computes the threshold-(n+1) closure, counts its vertices of full
    degree n-1, and branches on that count a:

    a = n      complete closure: h = n.
    a = 2      two dominating vertices u, v: h = n - 2 with set V - {u, v}
               if the rest is two disjoint cliques, else h = n.
    a = n/2    dominating clique over an independent half: h = n/2, the
               set is the below-full-degree half.
    a = 0      an n/2-regular closure: h = n/2 with one part as the set
               if it is balanced complete bipartite, else h = n.
    otherwise  (a = 1 or 2 < a < n/2) h = n.

    Any other profile cannot occur for a closed OTG and raises
    InternalInvariantError.
    """
    report = check_otg(g)
    if not report.is_otg:
        u, v = report.witness
        raise NotAnOtgError(
            f"not an OTG: vertices {u} and {v} are nonadjacent with degree sum "
            f"{g.degree(u) + g.degree(v)} < {g.n}"
        )
    n = g.n
    if n in (3, 4):
        return small_n_fallback(g)

    trace = weak_closure(g)
    gw = trace.result
    degw = gw.degrees()
    fullset = np.flatnonzero(degw == n - 1)
    a = int(fullset.size)
    everything = frozenset(range(n))

    if a == n:
        return HForceResult(n, everything, PHI3, trace)

    if a == 2:
        pair = frozenset(int(v) for v in fullset)
        if _two_clique_split(gw, pair) is not None:
            return HForceResult(n - 2, everything - pair, PHI1, trace)
        return HForceResult(n, everything, PHI3, trace)

    if n % 2 == 0 and a == n // 2:
        low = np.flatnonzero(degw < n - 1)
        _check_dominated_independent(gw, low)
        return HForceResult(n // 2, frozenset(low.tolist()), PHI2, trace)

    if a == 0:
        if n % 2 or not np.all(degw == n // 2):
            raise InternalInvariantError(
                "a closure with no full-degree vertex must be n/2-regular with n even"
            )
        parts = balanced_bipartite_parts(gw)
        if parts is not None:
            chosen = parts[0] if 0 in parts[0] else parts[1]
            return HForceResult(n // 2, chosen, PHI2, trace)
        return HForceResult(n, everything, PHI3, trace)

    if a == 1 or 2 < a < n / 2:
        return HForceResult(n, everything, PHI3, trace)

    raise InternalInvariantError(
        f"impossible closure degree profile: {a} vertices of degree n-1 on n={n}"
    )
