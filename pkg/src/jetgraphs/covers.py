"""Minimal vertex covers, coverage classes, and cover constructions for jets.

Enumeration goes through maximal independent sets (Bron-Kerbosch with
pivoting on the complement adjacency) and complements each one; a set is
a minimal vertex cover exactly when its complement is a maximal
independent set. Families are returned as lexicographically sorted tuples
of sorted index tuples, so they diff and snapshot cleanly.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .graphs import DisconnectedInput, Graph, bit_indices, is_connected

CoverFamily = tuple[tuple[int, ...], ...]


class NotMinimalCover(ValueError):
    """The supplied base set is not a minimal vertex cover of its graph."""


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def is_vertex_cover(g: Graph, cover: Iterable[int]) -> bool:
    """True iff every edge of g has an endpoint in ``cover``."""
    return _mask_is_cover(g, _mask(cover))


def _mask_is_cover(g: Graph, mask: int) -> bool:
    for i in range(g.n):
        if not mask >> i & 1 and g.adj[i] & ~mask:
            return False
    return True


def is_minimal_cover(g: Graph, cover: Iterable[int]) -> bool:
    """True iff ``cover`` covers g and no single removal still covers.

    Single removals suffice: a cover has a covering proper subset exactly
    when some one vertex is redundant.
    """
    mask = _mask(cover)
    if not _mask_is_cover(g, mask):
        return False
    for v in bit_indices(mask):
        if _mask_is_cover(g, mask ^ (1 << v)):
            return False
    return True


def _maximal_cliques(adj: Sequence[int], r: int, p: int, x: int, out: list[int]) -> None:
    if not p and not x:
        out.append(r)
        return
    pivot = max(bit_indices(p | x), key=lambda u: (adj[u] & p).bit_count())
    for v in bit_indices(p & ~adj[pivot]):
        mv = 1 << v
        _maximal_cliques(adj, r | mv, p & adj[v], x & adj[v], out)
        p ^= mv
        x |= mv


def minimal_vertex_covers(g: Graph) -> CoverFamily:
    """All minimal vertex covers, canonically sorted."""
    full = (1 << g.n) - 1
    co_adj = [~g.adj[v] & full & ~(1 << v) for v in range(g.n)]
    independent: list[int] = []
    _maximal_cliques(co_adj, 0, full, 0, independent)
    return tuple(sorted(tuple(bit_indices(full ^ m)) for m in independent))


def is_well_covered(g: Graph) -> bool:
    """True iff all minimal vertex covers share one cardinality."""
    return len({len(c) for c in minimal_vertex_covers(g)}) <= 1


def is_very_well_covered(g: Graph) -> bool:
    """True iff every minimal vertex cover has exactly n/2 vertices.

    False whenever n is odd; edgeless graphs with n >= 1 are false because
    their only minimal cover is empty.
    """
    if g.n % 2:
        return False
    half = g.n // 2
    return all(len(c) == half for c in minimal_vertex_covers(g))


def _require_connected_with_edges(g: Graph) -> None:
    if g.n < 2 or not is_connected(g):
        raise DisconnectedInput("construction requires a connected graph on >= 2 vertices")


def _require_minimal(g: Graph, base_cover: Sequence[int]) -> tuple[int, ...]:
    base = tuple(sorted(set(base_cover)))
    if not is_minimal_cover(g, base):
        raise NotMinimalCover(f"{base} is not a minimal vertex cover of the base graph")
    return base


def prop3_cover_odd(g: Graph, s: int) -> tuple[int, ...]:
    """The full levels 0..s as a minimal cover of the order-(2s+1) jet graph."""
    if s < 0:
        raise ValueError("level bound must be nonnegative")
    _require_connected_with_edges(g)
    return tuple(range(g.n * (s + 1)))


def prop3_cover_even(g: Graph, base_cover: Sequence[int], s: int) -> tuple[int, ...]:
    """Levels 0..s-1 in full plus the base cover at level s: a minimal cover
    of the order-2s jet graph."""
    if s < 1:
        raise ValueError("level bound must be at least 1")
    _require_connected_with_edges(g)
    base = _require_minimal(g, base_cover)
    return tuple(range(g.n * s)) + tuple(s * g.n + i for i in base)


def prop4_cover(g: Graph, base_cover: Sequence[int], s: int) -> tuple[int, ...]:
    """Every level 0..s of a minimal base cover: a minimal cover of the
    order-s jet graph."""
    if s < 0:
        raise ValueError("jet order must be nonnegative")
    base = _require_minimal(g, base_cover)
    return tuple(t * g.n + i for t in range(s + 1) for i in base)


def knn_cover_family(n: int, s: int) -> CoverFamily:
    """The s+2 minimal covers of the order-s jet graph of K_{n,n}.

    With parts x_1..x_n (bases 0..n-1) and y_1..y_n (bases n..2n-1), the
    p-th cover takes all x levels up to s-p and all y levels up to p-1;
    each has n*(s+1) vertices. Flat indices are level-major over 2n bases.
    """
    if n < 1:
        raise ValueError("part size must be at least 1")
    if s < 0:
        raise ValueError("jet order must be nonnegative")
    nn = 2 * n
    family = []
    for p in range(s + 2):
        members = [t * nn + i for t in range(s - p + 1) for i in range(n)]
        members += [u * nn + n + j for u in range(p) for j in range(n)]
        family.append(tuple(sorted(members)))
    return tuple(sorted(family))
