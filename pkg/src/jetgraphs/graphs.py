"""Simple undirected graphs over dense integer vertices with bitset adjacency.

Vertices are the integers 0..n-1. Adjacency is one Python int per vertex,
with bit k of ``adj[i]`` set iff {i, k} is an edge, so neighborhood
intersections, complements and induced restrictions are word-parallel.
Labels are presentation-only and never affect any algorithm.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class InvalidVertex(ValueError):
    """A vertex index is outside the host graph's range."""


class DisconnectedInput(ValueError):
    """An operation that requires a connected graph received a disconnected one."""


def bit_indices(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    Invariants: ``adj`` is symmetric and irreflexive; if ``labels`` is
    present it holds n distinct strings. Build through :meth:`from_edges`
    or :meth:`from_edge_mask` to get these for free; :meth:`validate`
    checks them for data read from untrusted sources.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> "Graph":
        rows = [0] * n
        for i, k in edges:
            if not (0 <= i < n and 0 <= k < n):
                raise InvalidVertex(f"edge ({i}, {k}) out of range for n={n}")
            if i == k:
                raise ValueError(f"loop at vertex {i} is not allowed")
            rows[i] |= 1 << k
            rows[k] |= 1 << i
        return cls(n, tuple(rows), tuple(labels) if labels is not None else None)

    @classmethod
    def from_edge_mask(
        cls, n: int, mask: int, labels: Sequence[str] | None = None
    ) -> "Graph":
        """Build from a bitmask over the vertex pairs in
        ``combinations(range(n), 2)`` order (bit 0 is the pair (0, 1))."""
        rows = [0] * n
        for bit, (i, k) in enumerate(combinations(range(n), 2)):
            if mask >> bit & 1:
                rows[i] |= 1 << k
                rows[k] |= 1 << i
        return cls(n, tuple(rows), tuple(labels) if labels is not None else None)

    def edge_mask(self) -> int:
        """Inverse of :meth:`from_edge_mask`."""
        mask = 0
        for bit, (i, k) in enumerate(combinations(range(self.n), 2)):
            if self.adj[i] >> k & 1:
                mask |= 1 << bit
        return mask

    def has_edge(self, i: int, k: int) -> bool:
        if not (0 <= i < self.n and 0 <= k < self.n):
            raise InvalidVertex(f"vertex pair ({i}, {k}) out of range for n={self.n}")
        return bool(self.adj[i] >> k & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (i, k) with i < k, in lexicographic order."""
        out = []
        for i in range(self.n):
            higher = self.adj[i] >> (i + 1)
            for off in bit_indices(higher):
                out.append((i, i + 1 + off))
        return out

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise InvalidVertex(f"vertex {v} out of range for n={self.n}")
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        if not 0 <= v < self.n:
            raise InvalidVertex(f"vertex {v} out of range for n={self.n}")
        return tuple(bit_indices(self.adj[v]))

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def validate(self) -> None:
        """Raise ValueError if any structural invariant is broken."""
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {i} mentions vertices >= n")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            for k in bit_indices(row):
                if not self.adj[k] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {k}")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise ValueError("label count does not match vertex count")
            if len(set(self.labels)) != self.n:
                raise ValueError("labels are not distinct")


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges of g."""
    full = (1 << g.n) - 1
    rows = tuple(~g.adj[i] & full & ~(1 << i) for i in range(g.n))
    return Graph(g.n, rows, g.labels)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Shortest-path edge counts from ``source``; -1 marks unreachable vertices."""
    if not 0 <= source < g.n:
        raise InvalidVertex(f"vertex {source} out of range for n={g.n}")
    dist = [-1] * g.n
    dist[source] = 0
    seen = frontier = 1 << source
    d = 0
    while frontier:
        reach = 0
        for v in bit_indices(frontier):
            reach |= g.adj[v]
        frontier = reach & ~seen
        seen |= frontier
        d += 1
        for v in bit_indices(frontier):
            dist[v] = d
    return dist


def is_connected(g: Graph) -> bool:
    """True iff every vertex pair is joined by a path; vacuously true for n <= 1."""
    if g.n <= 1:
        return True
    return -1 not in bfs_distances(g, 0)


def diameter(g: Graph) -> int | None:
    """Largest shortest-path distance over all vertex pairs.

    Returns None for disconnected graphs (a value, not a failure) and 0
    for graphs with at most one vertex.
    """
    if g.n <= 1:
        return 0
    best = 0
    for v in range(g.n):
        dist = bfs_distances(g, v)
        ecc = max(dist)
        if min(dist) < 0:
            return None
        best = max(best, ecc)
    return best


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on ``vertices``, reindexed 0..len-1 preserving order."""
    vs = list(vertices)
    for v in vs:
        if not 0 <= v < g.n:
            raise InvalidVertex(f"vertex {v} out of range for n={g.n}")
    if len(set(vs)) != len(vs):
        raise ValueError("induced subgraph vertices must be distinct")
    pos = {v: p for p, v in enumerate(vs)}
    rows = [0] * len(vs)
    for p, v in enumerate(vs):
        for u in bit_indices(g.adj[v]):
            q = pos.get(u)
            if q is not None:
                rows[p] |= 1 << q
    labels = tuple(g.labels[v] for v in vs) if g.labels is not None else None
    return Graph(len(vs), tuple(rows), labels)


def _signatures(g: Graph) -> list[tuple[int, tuple[int, ...]]]:
    degs = [a.bit_count() for a in g.adj]
    return [
        (degs[v], tuple(sorted(degs[u] for u in bit_indices(g.adj[v]))))
        for v in range(g.n)
    ]


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test by backtracking with degree-profile pruning.

    Desk-scale only: intended for the small graphs this library works with.
    """
    if g.n != h.n:
        return False
    n = g.n
    sig_g, sig_h = _signatures(g), _signatures(h)
    if sorted(sig_g) != sorted(sig_h):
        return False
    freq: dict[tuple[int, tuple[int, ...]], int] = {}
    for s in sig_g:
        freq[s] = freq.get(s, 0) + 1
    # rarest signature first, then high degree, keeps the search tree narrow
    order = sorted(range(n), key=lambda v: (freq[sig_g[v]], -sig_g[v][0], v))
    cand = {v: [u for u in range(n) if sig_h[u] == sig_g[v]] for v in range(n)}
    mapping = [-1] * n
    used = 0

    def backtrack(pos: int) -> bool:
        nonlocal used
        if pos == n:
            return True
        v = order[pos]
        gv = g.adj[v]
        for u in cand[v]:
            if used >> u & 1:
                continue
            if all(
                (gv >> w & 1) == (h.adj[u] >> mapping[w] & 1) for w in order[:pos]
            ):
                mapping[v] = u
                used |= 1 << u
                if backtrack(pos + 1):
                    return True
                mapping[v] = -1
                used ^= 1 << u
        return False

    return backtrack(0)
