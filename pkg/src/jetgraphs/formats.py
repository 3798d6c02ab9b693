"""graph6, DOT, and edge-list serialization.

graph6 packs the upper adjacency triangle column-by-column into 6-bit
groups offset by 63, size first (one byte below 63, '~' plus three bytes
up to 258047). The edge-list format is a "n m" header line followed by m
lines "u v" with 0-based endpoints. DOT output is deterministic bytes:
vertices in index order with label attributes, then edges.
"""

from __future__ import annotations

from .graphs import Graph
from .jets import JetGraph


class MalformedGraph6(ValueError):
    """A graph6 line failed to parse; the message carries the position."""


class MalformedEdgeList(ValueError):
    """An edge-list document failed to parse; the message carries the line."""


_G6_MAX = 258047


def write_graph6(g: Graph) -> str:
    if g.n > _G6_MAX:
        raise ValueError(f"graph6 writer supports at most {_G6_MAX} vertices")
    n = g.n
    if n <= 62:
        head = chr(63 + n)
    else:
        head = "~" + "".join(chr(63 + (n >> shift & 63)) for shift in (12, 6, 0))
    bits = []
    for j in range(1, n):
        col = g.adj[j]
        bits.extend((col >> i & 1) for i in range(j))
    out = [head]
    for at in range(0, len(bits), 6):
        group = 0
        for b in bits[at : at + 6]:
            group = group << 1 | b
        group <<= max(0, 6 - len(bits[at : at + 6]))
        out.append(chr(63 + group))
    return "".join(out)


def read_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise MalformedGraph6("empty graph6 line")
    vals = []
    for pos, ch in enumerate(s):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise MalformedGraph6(f"invalid character {ch!r} at position {pos}")
        vals.append(code - 63)
    if vals[0] == 63:
        if len(vals) >= 2 and vals[1] == 63:
            raise MalformedGraph6("size beyond 258047 is not supported (position 1)")
        if len(vals) < 4:
            raise MalformedGraph6(f"truncated size header at position {len(vals)}")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        data = vals[4:]
        data_pos = 4
    else:
        n = vals[0]
        data = vals[1:]
        data_pos = 1
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) != need:
        raise MalformedGraph6(
            f"expected {need} data characters for n={n}, found {len(data)}"
            f" (data starts at position {data_pos})"
        )
    rows = [0] * n
    at = 0
    for j in range(1, n):
        for i in range(j):
            if data[at // 6] >> (5 - at % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            at += 1
    if nbits % 6 and data and data[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise MalformedGraph6(
            f"nonzero padding bits at position {data_pos + len(data) - 1}"
        )
    return Graph(n, tuple(rows))


def write_dot(obj: Graph | JetGraph) -> str:
    """Undirected DOT with vertices in index order; jet vertices keep their
    "a_1"-style labels."""
    g = obj.graph if isinstance(obj, JetGraph) else obj
    lines = ["graph {"]
    for v in range(g.n):
        lines.append(f'  {v} [label="{g.label(v)}"];')
    for i, k in g.edges():
        lines.append(f"  {i} -- {k};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{i} {k}" for i, k in edges)
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    rows = [ln.strip() for ln in text.splitlines()]
    rows = [(no, ln) for no, ln in enumerate(rows, start=1) if ln and not ln.startswith("#")]
    if not rows:
        raise MalformedEdgeList("empty edge-list document")
    head_no, head = rows[0]
    parts = head.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise MalformedEdgeList(f'line {head_no}: expected header "n m", got {head!r}')
    n, m = int(parts[0]), int(parts[1])
    if len(rows) - 1 != m:
        raise MalformedEdgeList(
            f"header promises {m} edges but document has {len(rows) - 1} edge lines"
        )
    edges = []
    for no, ln in rows[1:]:
        parts = ln.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise MalformedEdgeList(f'line {no}: expected edge "u v", got {ln!r}')
        u, v = int(parts[0]), int(parts[1])
        if not (0 <= u < n and 0 <= v < n):
            raise MalformedEdgeList(f"line {no}: endpoint out of range for n={n}")
        if u == v:
            raise MalformedEdgeList(f"line {no}: loops are not allowed")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def detect_format(text: str) -> str:
    """Guess "edgelist" or "graph6" from the first non-empty line."""
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        parts = ln.split()
        if len(parts) == 2 and all(p.isdigit() for p in parts):
            return "edgelist"
        return "graph6"
    return "graph6"


def read_graphs(text: str, fmt: str = "auto") -> list[Graph]:
    """Parse a document into graphs: one per line for graph6, one per
    document for edge lists."""
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == "edgelist":
        return [read_edge_list(text)]
    if fmt == "graph6":
        return [
            read_graph6(ln)
            for ln in text.splitlines()
            if ln.strip() and not ln.strip().startswith("#")
        ]
    raise ValueError(f"unknown input format {fmt!r}")
