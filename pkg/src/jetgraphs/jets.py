"""Jet graphs: level-indexed copies of a base graph joined by a level-sum rule.

The order-s jet graph of G has one vertex (i, j) per base vertex i and
level j in 0..s, and an edge between (i, j) and (k, l) exactly when
{i, k} is an edge of G and j + l <= s. Flat indexing is level-major:
flat(i, j) = j*n + i, so level 0 occupies indices 0..n-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .graphs import Graph, InvalidVertex


class JetVertex(NamedTuple):
    base: int
    level: int


def jet_vertex_name(jv: JetVertex, source: Graph) -> str:
    """Display name of a jet vertex, e.g. ("a", 2) -> "a_2"."""
    if not 0 <= jv.base < source.n:
        raise InvalidVertex(f"base vertex {jv.base} out of range for n={source.n}")
    if jv.level < 0:
        raise ValueError("jet level must be nonnegative")
    return f"{source.label(jv.base)}_{jv.level}"


@dataclass(frozen=True)
class JetGraph:
    """An order-s jet graph together with its source and index maps."""

    source: Graph
    order: int
    graph: Graph

    def flat_index(self, base: int, level: int) -> int:
        if not 0 <= base < self.source.n:
            raise InvalidVertex(f"base vertex {base} out of range")
        if not 0 <= level <= self.order:
            raise InvalidVertex(f"level {level} out of range for order {self.order}")
        return level * self.source.n + base

    def jet_vertex(self, index: int) -> JetVertex:
        if not 0 <= index < self.graph.n:
            raise InvalidVertex(f"flat index {index} out of range")
        return JetVertex(index % self.source.n, index // self.source.n)

    def vertex_name(self, index: int) -> str:
        return jet_vertex_name(self.jet_vertex(index), self.source)


def _jet_labels(source_n: int, labels: Sequence[str] | None, levels: int) -> tuple[str, ...]:
    base = [labels[i] if labels is not None else str(i) for i in range(source_n)]
    return tuple(f"{base[i]}_{j}" for j in range(levels) for i in range(source_n))


def jet_graph(g: Graph, s: int) -> JetGraph:
    """Construct the order-s jet graph of a simple graph.

    The result has n*(s+1) vertices and |E(g)|*(s+1)*(s+2)/2 edges; every
    isolated vertex of g still contributes its s+1 jet vertices.
    """
    if s < 0:
        raise ValueError("jet order must be nonnegative")
    n = g.n
    rows = [0] * (n * (s + 1))
    for i in range(n):
        acc = 0
        for j in range(s, -1, -1):
            # neighbors of (i, j) are level shifts of adj[i] up to level s - j
            acc |= g.adj[i] << ((s - j) * n)
            rows[j * n + i] = acc
    return JetGraph(g, s, Graph(n * (s + 1), tuple(rows), _jet_labels(n, g.labels, s + 1)))


@dataclass(frozen=True)
class DiGraph:
    """Immutable simple directed graph; bit k of ``out[i]`` marks the arc i -> k."""

    n: int
    out: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    @classmethod
    def from_arcs(
        cls,
        n: int,
        arcs: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> "DiGraph":
        rows = [0] * n
        for i, k in arcs:
            if not (0 <= i < n and 0 <= k < n):
                raise InvalidVertex(f"arc ({i}, {k}) out of range for n={n}")
            if i == k:
                raise ValueError(f"self-arc at vertex {i} is not allowed")
            rows[i] |= 1 << k
        return cls(n, tuple(rows), tuple(labels) if labels is not None else None)

    def arcs(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            for k in range(self.n):
                if self.out[i] >> k & 1:
                    out.append((i, k))
        return out

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)


def jet_digraph(d: DiGraph, s: int) -> DiGraph:
    """Directed analogue of :func:`jet_graph`: arc (v, i) -> (w, j) iff
    (v, w) is an arc and i + j <= s, with the same level-major flattening."""
    if s < 0:
        raise ValueError("jet order must be nonnegative")
    n = d.n
    rows = [0] * (n * (s + 1))
    for i in range(n):
        acc = 0
        for j in range(s, -1, -1):
            acc |= d.out[i] << ((s - j) * n)
            rows[j * n + i] = acc
    return DiGraph(n * (s + 1), tuple(rows), _jet_labels(n, d.labels, s + 1))
