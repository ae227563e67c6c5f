"""Exponential-time ground truth for forcing sets on small graphs.

Everything here works straight from the definitions: enumerate all
cycles, call a vertex set X forcing when no non-Hamiltonian cycle
contains all of X, and find the minimum by exhaustive search.  A set X
is forcing exactly when it intersects V - V(C) for every
non-Hamiltonian cycle C (an X-cycle is precisely a cycle whose vertex
set contains X), so the minimum forcing set is a minimum hitting set
over those complements.

Exactness is the point, speed is not: inputs are capped at n = 12 by
default.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph

__all__ = [
    "ORACLE_CAP",
    "OracleReport",
    "OracleSizeError",
    "enumerate_cycles",
    "is_hamiltonian_bf",
    "is_hforce",
    "min_hforce",
]

ORACLE_CAP = 12


class OracleSizeError(ValueError):
    """Input exceeds the brute-force size cap."""


@dataclass(frozen=True)
class OracleReport:
    """Brute-force ground truth for one graph: every non-Hamiltonian
    cycle, the minimum forcing-set cardinality, and one witness set.  No
    smaller forcing set exists; the search proves it exhaustively."""

    nonhamiltonian_cycles: tuple[tuple[int, ...], ...]
    min_h: int
    min_set: frozenset[int]
    is_hamiltonian_graph: bool


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise OracleSizeError(f"oracle size limit: n={n} exceeds cap {cap}")


def _neighbor_masks(g: Graph) -> list[int]:
    return [sum(1 << int(w) for w in g.neighbors(v)) for v in range(g.n)]


def enumerate_cycles(g: Graph, cap: int = ORACLE_CAP) -> list[tuple[int, ...]]:
    """Every cycle of g, each exactly once, in canonical form.

    Depth-first search from each start vertex s over vertices greater
    than s, closing back to s.  A cycle whose smallest vertex is s is
    walked once per orientation; emitting only when the second vertex is
    smaller than the last keeps the canonical representative and drops
    the mirror.
    """
    n = g.n
    _check_cap(n, cap)
    nbr = _neighbor_masks(g)
    cycles: list[tuple[int, ...]] = []
    emit = cycles.append
    for s in range(n):
        allowed = ~((1 << (s + 1)) - 1)
        sbit = 1 << s
        path = [s]
        append = path.append
        pop = path.pop

        def walk(v: int, visited: int) -> None:
            nv = nbr[v]
            if nv & sbit and len(path) >= 3 and path[1] < v:
                emit(tuple(path))
            m = nv & allowed & ~visited
            while m:
                b = m & -m
                m ^= b
                w = b.bit_length() - 1
                append(w)
                walk(w, visited | b)
                pop()

        walk(s, sbit)
    return cycles


def is_hamiltonian_bf(g: Graph, cap: int = ORACLE_CAP) -> bool:
    """Backtracking search: does any Hamiltonian cycle exist?"""
    n = g.n
    _check_cap(n, cap)
    if n < 3:
        return False
    nbr = _neighbor_masks(g)
    full = (1 << n) - 1

    def walk(v: int, visited: int) -> bool:
        if visited == full:
            return bool(nbr[v] & 1)
        m = nbr[v] & ~visited
        while m:
            b = m & -m
            m ^= b
            if walk(b.bit_length() - 1, visited | b):
                return True
        return False

    return walk(0, 1)


def _require_hamiltonian(g: Graph, cap: int) -> None:
    if not is_hamiltonian_bf(g, cap):
        raise ValueError("graph is not Hamiltonian")


def is_hforce(g: Graph, x, cap: int = ORACLE_CAP) -> bool:
    """Is X a forcing set: does every cycle through all of X span the graph?"""
    xs = {int(v) for v in x}
    if not xs:
        raise ValueError("X must be nonempty")
    if any(not 0 <= v < g.n for v in xs):
        raise ValueError(f"X contains a vertex out of range 0..{g.n - 1}")
    _require_hamiltonian(g, cap)
    xmask = sum(1 << v for v in xs)
    n = g.n
    for c in enumerate_cycles(g, cap):
        if len(c) == n:
            continue
        cmask = 0
        for v in c:
            cmask |= 1 << v
        if cmask & xmask == xmask:
            return False
    return True


def min_hforce(g: Graph, cap: int = ORACLE_CAP) -> OracleReport:
    """Exact minimum forcing set by cardinality-ascending search.

    Hitting-set view: X is forcing iff it hits the complement V - V(C)
    of every non-Hamiltonian cycle C.  Complements that contain another
    complement are redundant, and any optimal hitting set lives inside
    the union of the rest, so the subset search runs over that union in
    increasing size and stops at the first hit.  When no non-Hamiltonian
    cycle exists at all, every nonempty set is forcing and the minimum
    is the singleton {0}.
    """
    n = g.n
    _require_hamiltonian(g, cap)
    cycles = enumerate_cycles(g, cap)
    nonham = tuple(c for c in cycles if len(c) < n)
    if not nonham:
        return OracleReport((), 1, frozenset({0}), True)

    full = (1 << n) - 1
    comp_masks = set()
    for c in nonham:
        m = 0
        for v in c:
            m |= 1 << v
        comp_masks.add(full ^ m)
    # Keep only inclusion-minimal complements.
    minimal: list[int] = []
    for m in sorted(comp_masks, key=lambda x: x.bit_count()):
        if not any(k & m == k for k in minimal):
            minimal.append(m)

    union = 0
    for m in minimal:
        union |= m
    candidates = [v for v in range(n) if union >> v & 1]
    for k in range(1, len(candidates) + 1):
        for xs in combinations(candidates, k):
            xmask = 0
            for v in xs:
                xmask |= 1 << v
            if all(xmask & m for m in minimal):
                return OracleReport(nonham, k, frozenset(xs), True)
    raise AssertionError("unreachable: the full candidate set hits every complement")
