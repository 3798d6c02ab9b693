"""Shared fixtures-as-functions and the minimal DOT reader used by tests."""

from __future__ import annotations

import re

from hypothesis import strategies as st

from jetgraphs.graphs import Graph


def lettered_p3() -> Graph:
    """Path on a, b, c with center c (edges ac, cb)."""
    return Graph.from_edges(3, [(0, 2), (2, 1)], ("a", "b", "c"))


def lettered_k3() -> Graph:
    return Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)], ("a", "b", "c"))


def lettered_p4() -> Graph:
    """Path a-b-c-d."""
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)], ("a", "b", "c", "d"))


def lettered_c4() -> Graph:
    """4-cycle a-c-b-d-a, so {a,b} and {c,d} are the opposite pairs."""
    return Graph.from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)], ("a", "b", "c", "d"))


def diamond() -> Graph:
    """K_4 minus one edge, on x1..x4 with x1 and x3 the non-adjacent pair."""
    return Graph.from_edges(
        4, [(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)], ("x1", "x2", "x3", "x4")
    )


def label_edges(g: Graph) -> set[tuple[str, str]]:
    return {tuple(sorted((g.label(i), g.label(k)))) for i, k in g.edges()}


def label_family(g: Graph, family) -> set[tuple[str, ...]]:
    return {tuple(g.label(v) for v in cover) for cover in family}


_DOT_NODE = re.compile(r'^\s*(\d+) \[label="([^"]*)"\];$')
_DOT_EDGE = re.compile(r"^\s*(\d+) -- (\d+);$")


def parse_dot(text: str) -> tuple[int, list[str], set[tuple[int, int]]]:
    """Read back the DOT dialect this package emits: nodes, labels, edges."""
    labels: dict[int, str] = {}
    edges: set[tuple[int, int]] = set()
    for line in text.splitlines():
        if line in ("graph {", "}", ""):
            continue
        m = _DOT_NODE.match(line)
        if m:
            labels[int(m.group(1))] = m.group(2)
            continue
        m = _DOT_EDGE.match(line)
        if m:
            a, b = int(m.group(1)), int(m.group(2))
            edges.add((min(a, b), max(a, b)))
            continue
        raise ValueError(f"unparseable DOT line: {line!r}")
    n = len(labels)
    assert sorted(labels) == list(range(n)), "node ids must be 0..n-1"
    return n, [labels[i] for i in range(n)], edges


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 10, connected: bool = False):
    n = draw(st.integers(min_n, max_n))
    nbits = n * (n - 1) // 2
    mask = draw(st.integers(0, (1 << nbits) - 1)) if nbits else 0
    g = Graph.from_edge_mask(n, mask)
    if connected and n >= 2:
        perm = draw(st.permutations(range(n)))
        attach = [draw(st.integers(0, i - 1)) for i in range(1, n)]
        tree = [(perm[i], perm[attach[i - 1]]) for i in range(1, n)]
        g = Graph.from_edges(n, g.edges() + tree)
    return g
