"""Exact vertex coloring and level-preserving lifts to jet graphs.

The exact solver is DSATUR branch-and-bound with a greedy initial upper
bound and a greedy maximal-clique lower bound. Vertex selection breaks
ties by (saturation, degree, lowest index), so results are deterministic;
witness colorings are canonicalized by renumbering color classes in order
of their smallest member.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import Graph, bit_indices


class ImproperInput(ValueError):
    """A coloring claimed proper for a graph has a monochromatic edge."""


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    k: int


def _color_seq(c: Coloring | Sequence[int]) -> Sequence[int]:
    return c.colors if isinstance(c, Coloring) else c


def is_proper(g: Graph, coloring: Coloring | Sequence[int]) -> bool:
    """True iff no edge of g joins two equal colors."""
    colors = _color_seq(coloring)
    if len(colors) != g.n:
        return False
    for i in range(g.n):
        for k in bit_indices(g.adj[i] >> (i + 1)):
            if colors[i] == colors[i + 1 + k]:
                return False
    return True


def _canonical(colors: Sequence[int]) -> tuple[int, ...]:
    # classes renumbered in order of first appearance == by smallest member
    remap: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in remap:
            remap[c] = len(remap)
        out.append(remap[c])
    return tuple(out)


def _saturation(g: Graph, colors: list[int], v: int) -> int:
    seen = set()
    for u in bit_indices(g.adj[v]):
        if colors[u] >= 0:
            seen.add(colors[u])
    return len(seen)


def _pick_vertex(g: Graph, colors: list[int], degs: list[int]) -> int:
    best_v = -1
    best_key: tuple[int, int, int] | None = None
    for v in range(g.n):
        if colors[v] >= 0:
            continue
        key = (_saturation(g, colors, v), degs[v], -v)
        if best_key is None or key > best_key:
            best_key, best_v = key, v
    return best_v


def greedy_coloring(g: Graph) -> Coloring:
    """DSATUR greedy coloring; an upper bound for the chromatic number."""
    colors = [-1] * g.n
    degs = [a.bit_count() for a in g.adj]
    for _ in range(g.n):
        v = _pick_vertex(g, colors, degs)
        used = {colors[u] for u in bit_indices(g.adj[v]) if colors[u] >= 0}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    canon = _canonical(colors)
    return Coloring(canon, (max(canon) + 1) if canon else 0)


def greedy_clique_size(g: Graph) -> int:
    """Size of a greedily grown maximal clique; a chromatic lower bound."""
    if g.n == 0:
        return 0
    degs = [a.bit_count() for a in g.adj]
    v0 = max(range(g.n), key=lambda v: (degs[v], -v))
    clique = 1 << v0
    cand = g.adj[v0]
    while cand:
        u = max(bit_indices(cand), key=lambda w: ((g.adj[w] & cand).bit_count(), -w))
        clique |= 1 << u
        cand &= g.adj[u]
    return clique.bit_count()


def chromatic_number(g: Graph) -> tuple[int, Coloring]:
    """Minimum number of colors in a proper coloring, plus a witness.

    Returns 0 colors for the empty graph and 1 for edgeless graphs.
    """
    n = g.n
    if n == 0:
        return 0, Coloring((), 0)
    greedy = greedy_coloring(g)
    best = list(greedy.colors)
    best_k = greedy.k
    lower = greedy_clique_size(g)
    if best_k > lower:
        degs = [a.bit_count() for a in g.adj]
        colors = [-1] * n

        def descend(colored: int, used: int) -> None:
            nonlocal best, best_k
            if used >= best_k or best_k == lower:
                return
            if colored == n:
                best, best_k = colors.copy(), used
                return
            v = _pick_vertex(g, colors, degs)
            conflicts = {colors[u] for u in bit_indices(g.adj[v]) if colors[u] >= 0}
            limit = min(used + 1, best_k - 1)
            for c in range(limit):
                if c in conflicts:
                    continue
                colors[v] = c
                descend(colored + 1, max(used, c + 1))
                colors[v] = -1

        descend(0, 0)
    canon = _canonical(best)
    k = max(canon) + 1
    return k, Coloring(canon, k)


def lift_coloring(g: Graph, coloring: Coloring, s: int) -> Coloring:
    """Color every jet vertex (i, j) of the order-s jet graph like i.

    The lift of a proper coloring is proper on the jet graph and uses the
    same number of colors.
    """
    if s < 0:
        raise ValueError("jet order must be nonnegative")
    if len(coloring.colors) != g.n or not is_proper(g, coloring):
        raise ImproperInput("input coloring is not a proper coloring of the graph")
    return Coloring(coloring.colors * (s + 1), coloring.k)
