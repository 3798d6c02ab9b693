"""Named graph families and the exhaustive labeled connected-graph corpus."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .covers import is_very_well_covered
from .graphs import Graph, is_connected


class InvalidParameter(ValueError):
    """A family was requested with parameters outside its domain."""


class TooLarge(ValueError):
    """Exhaustive enumeration was requested beyond the supported size."""


class TranscriptionError(RuntimeError):
    """A hard-coded catalog graph failed its defining sanity property."""


FAMILY_KINDS = (
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "star",
    "favaron",
    "example3",
)

# labeled connected graphs on n = 0..7 vertices
CONNECTED_GRAPH_COUNTS = (1, 1, 1, 4, 38, 728, 26704, 1866256)
MAX_ENUM_VERTICES = 7


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = field(default_factory=tuple)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter("path needs at least 1 vertex")
    labels = [f"v{i + 1}" for i in range(n)]
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], labels)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter("cycle needs at least 3 vertices")
    labels = [f"v{i + 1}" for i in range(n)]
    edges = [(i, (i + 1) % n) for i in range(n)]
    return Graph.from_edges(n, edges, labels)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter("complete graph needs at least 1 vertex")
    labels = [f"v{i + 1}" for i in range(n)]
    return Graph.from_edges(n, combinations(range(n), 2), labels)


def complete_bipartite_graph(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise InvalidParameter("bipartite parts must both be nonempty")
    labels = [f"x{i + 1}" for i in range(m)] + [f"y{j + 1}" for j in range(n)]
    edges = [(i, m + j) for i in range(m) for j in range(n)]
    return Graph.from_edges(m + n, edges, labels)


def star_graph(n: int) -> Graph:
    """Center x0 joined to leaves x1..xn; isomorphic to complete_bipartite(1, n)."""
    if n < 1:
        raise InvalidParameter("star needs at least 1 leaf")
    labels = [f"x{i}" for i in range(n + 1)]
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)], labels)


def example3_graph() -> Graph:
    """Five vertices a..e; a and b joined to each of c, d, e, plus the edge ce.

    Diameter 2; its order-1 jets are co-chordal while its order-2 jets are not.
    """
    edges = [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 4)]
    return Graph.from_edges(5, edges, ("a", "b", "c", "d", "e"))


_FAVARON_EDGES = (
    (0, 1),
    (0, 4),
    (0, 5),
    (0, 6),
    (1, 2),
    (1, 6),
    (1, 7),
    (2, 5),
    (2, 6),
    (3, 6),
)


def favaron_graph() -> Graph:
    """An 8-vertex, 10-edge very well covered graph that is not bipartite-complete.

    The edge list is transcribed from a drawing, so construction re-checks
    the defining property and fails loudly if the transcription drifts.
    """
    g = Graph.from_edges(8, _FAVARON_EDGES, [f"v{i + 1}" for i in range(8)])
    if not is_very_well_covered(g):
        raise TranscriptionError("catalog graph lost the very-well-covered property")
    return g


def make_family(spec: FamilySpec) -> Graph:
    kind, params = spec.kind, spec.params

    def arity(k: int) -> None:
        if len(params) != k:
            raise InvalidParameter(f"{kind} takes {k} parameter(s), got {len(params)}")

    if kind == "path":
        arity(1)
        return path_graph(params[0])
    if kind == "cycle":
        arity(1)
        return cycle_graph(params[0])
    if kind == "complete":
        arity(1)
        return complete_graph(params[0])
    if kind == "complete_bipartite":
        arity(2)
        return complete_bipartite_graph(params[0], params[1])
    if kind == "star":
        arity(1)
        return star_graph(params[0])
    if kind == "favaron":
        arity(0)
        return favaron_graph()
    if kind == "example3":
        arity(0)
        return example3_graph()
    raise InvalidParameter(f"unknown family kind {kind!r}")


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """All labeled connected graphs on n vertices, ordered by edge-bitmask.

    Labeled, not up to isomorphism: every connected subset of the
    2^(n(n-1)/2) edge masks appears once.
    """
    if n < 0:
        raise InvalidParameter("vertex count must be nonnegative")
    if n > MAX_ENUM_VERTICES:
        raise TooLarge(f"exhaustive enumeration is limited to n <= {MAX_ENUM_VERTICES}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        m = mask
        while m:
            low = m & -m
            i, k = pairs[low.bit_length() - 1]
            rows[i] |= 1 << k
            rows[k] |= 1 << i
            m ^= low
        g = Graph(n, tuple(rows))
        if is_connected(g):
            yield g
