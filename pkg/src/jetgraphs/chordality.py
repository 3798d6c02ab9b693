"""Chordality and co-chordality recognition with self-certifying witnesses.

Recognition repeatedly eliminates the lowest-index simplicial vertex. If
elimination completes, the elimination sequence is a simplicial order; if
it sticks, the residual graph has no simplicial vertex, hence contains an
induced cycle of length >= 4, which is extracted as the witness. Reports
therefore always carry a certificate that can be re-checked in isolation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import (
    DisconnectedInput,
    Graph,
    InvalidVertex,
    bfs_distances,
    bit_indices,
    complement,
    is_connected,
)


@dataclass(frozen=True)
class ChordalityReport:
    """Outcome plus exactly one verifying witness.

    ``order`` is a simplicial order when chordal; ``cycle`` is an induced
    chordless cycle of length >= 4 (in cyclic order) when not.
    """

    chordal: bool
    order: tuple[int, ...] | None = None
    cycle: tuple[int, ...] | None = None


def _neighborhood_is_clique(adj: Sequence[int], nb: int) -> bool:
    for u in bit_indices(nb):
        if nb & ~adj[u] & ~(1 << u):
            return False
    return True


def is_simplicial(g: Graph, v: int) -> bool:
    """True iff the neighbors of v induce a complete subgraph."""
    if not 0 <= v < g.n:
        raise InvalidVertex(f"vertex {v} out of range for n={g.n}")
    return _neighborhood_is_clique(g.adj, g.adj[v])


def verify_simplicial_order(g: Graph, order: Sequence[int]) -> bool:
    """Check that each vertex is simplicial in the graph induced on itself
    and its successors in ``order``. False for non-permutations."""
    if sorted(order) != list(range(g.n)):
        return False
    alive = (1 << g.n) - 1
    for v in order:
        if not _neighborhood_is_clique(g.adj, g.adj[v] & alive):
            return False
        alive ^= 1 << v
    return True


def _lowest_simplicial(adj: Sequence[int], alive: int) -> int | None:
    for v in bit_indices(alive):
        if _neighborhood_is_clique(adj, adj[v] & alive):
            return v
    return None


def _shortest_path(
    adj: Sequence[int], allowed: int, src: int, dst: int
) -> list[int] | None:
    """Deterministic BFS path from src to dst inside the ``allowed`` mask."""
    parent = {src: -1}
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            for w in bit_indices(adj[u] & allowed):
                if w in parent:
                    continue
                parent[w] = u
                if w == dst:
                    path = [w]
                    while parent[path[-1]] != -1:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return path
                nxt.append(w)
        frontier = nxt
    return None


def _chordless_cycle(adj: Sequence[int], alive: int) -> tuple[int, ...]:
    # Some alive v has non-adjacent neighbors x, y joined by a path that
    # avoids the rest of N[v]; shortest such path + v is an induced cycle.
    for v in bit_indices(alive):
        nb = adj[v] & alive
        for x in bit_indices(nb):
            for y in bit_indices(nb & ~adj[x] & ~(1 << x)):
                allowed = (alive & ~nb & ~(1 << v)) | (1 << x) | (1 << y)
                path = _shortest_path(adj, allowed, x, y)
                if path is not None:
                    return (v, *path)
    raise AssertionError("residual graph without simplicial vertex has no cycle")


def chordality(g: Graph) -> ChordalityReport:
    """Recognize chordal graphs; either witness verifies by construction."""
    alive = (1 << g.n) - 1
    order = []
    while alive:
        v = _lowest_simplicial(g.adj, alive)
        if v is None:
            return ChordalityReport(False, cycle=_chordless_cycle(g.adj, alive))
        order.append(v)
        alive ^= 1 << v
    return ChordalityReport(True, order=tuple(order))


def is_cochordal(g: Graph) -> ChordalityReport:
    """Chordality of the complement; witness indices refer to the same vertices."""
    return chordality(complement(g))


def check_induced_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    """True iff ``cycle`` (cyclic order, length >= 4, distinct vertices) has
    every consecutive pair adjacent and every other pair non-adjacent."""
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    if any(not 0 <= v < g.n for v in cycle):
        return False
    for a in range(k):
        for b in range(a + 1, k):
            consecutive = b - a == 1 or (a == 0 and b == k - 1)
            if bool(g.adj[cycle[a]] >> cycle[b] & 1) != consecutive:
                return False
    return True


def theorem3_witness(g: Graph, s: int) -> tuple[int, int, int, int] | None:
    """For a connected graph of diameter >= 3, a 4-cycle that is induced in
    the complement of its order-s jet graph; None when diameter < 3.

    Picks a geodesic a-b-c-d of length 3 and returns the flat jet indices
    (a_0, d_0, b_s, c_s) in cyclic order.
    """
    if s < 1:
        raise ValueError("jet order must be at least 1")
    if not is_connected(g):
        raise DisconnectedInput("diameter witness requires a connected graph")
    n = g.n
    for a in range(n):
        dist = bfs_distances(g, a)
        for d in range(n):
            if dist[d] != 3:
                continue
            c = min(u for u in bit_indices(g.adj[d]) if dist[u] == 2)
            b = min(u for u in bit_indices(g.adj[c]) if dist[u] == 1)
            return (a, d, s * n + b, s * n + c)
    return None
