"""Simple undirected graphs on contiguous vertex labels 0..n-1.

The adjacency relation is stored as a dense symmetric boolean matrix,
so degree and neighbourhood queries are plain numpy operations.  Graph
values are immutable after construction; every operation in this
package is a pure function of its inputs, so graphs can be shared
freely between threads.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "EdgeListParseError",
    "Graph",
    "InternalInvariantError",
    "canonical_cycle",
    "complement_components",
    "format_edgelist",
    "is_hamiltonian_cycle",
    "is_valid_cycle",
    "parse_edgelist",
]


class EdgeListParseError(ValueError):
    """Malformed edge-list input: bad header, self-loop, label out of range."""


class InternalInvariantError(RuntimeError):
    """A structural fact the algorithms are entitled to rely on failed to
    hold.  Seeing this exception always indicates a bug, never bad input."""


class Graph:
    """Immutable simple graph: no loops, no parallel edges.

    Vertices are exactly the integers 0..n-1.  Edges passed to the
    constructor may contain duplicates (they are collapsed); a self-loop
    is rejected.
    """

    __slots__ = ("n", "_adj", "_deg")

    def __init__(self, n: int, edges=()):
        if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {n!r}")
        n = int(n)
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex out of range in edge ({u}, {v}) for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u, v] = adj[v, u] = True
        self.n = n
        self._adj = adj
        self._deg = adj.sum(axis=1)
        adj.setflags(write=False)
        self._deg.setflags(write=False)

    @classmethod
    def _from_matrix(cls, adj: np.ndarray) -> "Graph":
        # Trusted fast path for matrices built internally.  Takes
        # ownership of `adj`: the caller must not write to it afterwards.
        g = object.__new__(cls)
        g.n = int(adj.shape[0])
        g._adj = adj
        g._deg = adj.sum(axis=1)
        adj.setflags(write=False)
        g._deg.setflags(write=False)
        return g

    @property
    def adjacency(self) -> np.ndarray:
        """The n x n boolean adjacency matrix (read-only)."""
        return self._adj

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")
        return int(self._deg[v])

    def degrees(self) -> np.ndarray:
        """Degree of every vertex, indexed by label (read-only array)."""
        return self._deg

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u, v])

    def neighbors(self, v: int) -> np.ndarray:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")
        return np.flatnonzero(self._adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, in lexicographic order."""
        us, vs = np.nonzero(np.triu(self._adj, 1))
        return list(zip(us.tolist(), vs.tolist()))

    def edge_count(self) -> int:
        return int(self._deg.sum()) // 2

    def is_complete(self) -> bool:
        return self.edge_count() == self.n * (self.n - 1) // 2

    def add_edge(self, u: int, v: int) -> "Graph":
        """A new graph with the edge (u, v) added."""
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"vertex out of range in edge ({u}, {v})")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if self._adj[u, v]:
            raise ValueError(f"edge ({u}, {v}) already present")
        adj = self._adj.copy()
        adj[u, v] = adj[v, u] = True
        return Graph._from_matrix(adj)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._adj, other._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count()})"


def canonical_cycle(order) -> tuple[int, ...]:
    """Normalise a cyclic vertex sequence.

    The canonical representative starts at the smallest vertex and runs
    in the direction that makes the second element smaller than the
    last, which fixes both rotation and reflection.
    """
    seq = [int(v) for v in order]
    if len(seq) < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    if len(set(seq)) != len(seq):
        raise ValueError("repeated vertex in cycle")
    i = seq.index(min(seq))
    rot = seq[i:] + seq[:i]
    if rot[1] > rot[-1]:
        rot = [rot[0]] + rot[:0:-1]
    return tuple(rot)


def is_valid_cycle(g: Graph, order) -> bool:
    """True iff `order` is a cycle of g in canonical form.

    Checks: at least 3 distinct in-range vertices, consecutive entries
    (wrapping around) adjacent, and canonical rotation/reflection.
    Malformed input yields False rather than an exception.
    """
    try:
        seq = [int(v) for v in order]
    except (TypeError, ValueError):
        return False
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    if any(not 0 <= v < g.n for v in seq):
        return False
    if tuple(seq) != canonical_cycle(seq):
        return False
    adj = g.adjacency
    return all(adj[seq[i - 1], seq[i]] for i in range(len(seq)))


def is_hamiltonian_cycle(g: Graph, order) -> bool:
    """True iff `order` is a valid canonical cycle through every vertex."""
    try:
        length = len(list(order))
    except TypeError:
        return False
    return length == g.n and is_valid_cycle(g, order)


def complement_components(g: Graph) -> list[frozenset[int]]:
    """Connected components of the complement graph.

    Returned in order of their smallest member; their disjoint union is
    the full vertex set.
    """
    comp = ~g.adjacency
    np.fill_diagonal(comp, False)
    n = g.n
    seen = np.zeros(n, dtype=bool)
    out = []
    for s in range(n):
        if seen[s]:
            continue
        members = np.zeros(n, dtype=bool)
        members[s] = True
        frontier = members.copy()
        while frontier.any():
            frontier = comp[frontier].any(axis=0) & ~members
            members |= frontier
        seen |= members
        out.append(frozenset(np.flatnonzero(members).tolist()))
    return out


def parse_edgelist(text: str) -> Graph:
    """Parse the edge-list interchange format.

    The first non-comment line is the vertex count n; every following
    non-comment line is an edge ``u v``.  Lines starting with ``#`` and
    blank lines are skipped.  Duplicate edges are collapsed; self-loops
    and labels outside 0..n-1 are parse errors.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise EdgeListParseError(
                    f"line {lineno}: expected a single vertex count, got {line!r}"
                )
            try:
                n = int(fields[0])
            except ValueError:
                raise EdgeListParseError(
                    f"line {lineno}: vertex count is not an integer: {fields[0]!r}"
                ) from None
            if n < 1:
                raise EdgeListParseError(f"line {lineno}: vertex count must be positive")
            continue
        if len(fields) != 2:
            raise EdgeListParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListParseError(f"line {lineno}: non-integer endpoint in {line!r}") from None
        if u == v:
            raise EdgeListParseError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(
                f"line {lineno}: vertex label out of range 0..{n - 1} in {line!r}"
            )
        edges.append((u, v))
    if n is None:
        raise EdgeListParseError("empty input: missing vertex count line")
    return Graph(n, edges)


def format_edgelist(g: Graph, comment: str | None = None) -> str:
    """Render a graph in the edge-list interchange format."""
    lines = [] if comment is None else [f"# {comment}"]
    lines.append(str(g.n))
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
