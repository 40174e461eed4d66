"""Graph serialization: edge-list text and graph6.

Edge-list format: first line ``n m``, then m lines ``u v`` with 0-based
whitespace-separated endpoints; lines starting with ``#`` are ignored.

graph6 is the standard ASCII encoding (6 bits per character, offset 63,
N(n) size prefix, upper-triangle bits in column order). Reader and writer
round-trip byte-exactly.
"""

from __future__ import annotations

from .errors import FormatError
from .graph import Graph

__all__ = [
    "read_edge_list",
    "write_edge_list",
    "read_graph6",
    "write_graph6",
    "load_graph",
    "save_graph",
]

_GRAPH6_HEADER = ">>graph6<<"


def read_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise FormatError("edge-list input is empty")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"expected header 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise FormatError(f"non-integer header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise FormatError(f"header announces {m} edges but {len(lines) - 1} edge lines follow")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"expected edge line 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise FormatError(f"non-integer endpoint in {ln!r}") from exc
    try:
        return Graph.from_edge_list(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> shift & 63)) for shift in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(63 + (n >> shift & 63)) for shift in (30, 24, 18, 12, 6, 0))
    raise FormatError(f"graph6 cannot encode n = {n}")


def _decode_size(s: str) -> tuple[int, int]:
    """Vertex count and the number of prefix characters consumed."""
    if not s:
        raise FormatError("empty graph6 string")
    if s[0] != "~":
        return ord(s[0]) - 63, 1
    if len(s) >= 2 and s[1] != "~":
        if len(s) < 4:
            raise FormatError("truncated graph6 size prefix")
        vals = [ord(c) - 63 for c in s[1:4]]
        return (vals[0] << 12) | (vals[1] << 6) | vals[2], 4
    if len(s) < 8:
        raise FormatError("truncated graph6 size prefix")
    vals = [ord(c) - 63 for c in s[2:8]]
    n = 0
    for v in vals:
        n = n << 6 | v
    return n, 8


def write_graph6(g: Graph) -> str:
    n = g.n
    out = [_encode_size(n)]
    buf = 0
    filled = 0
    for j in range(1, n):
        col = g.adjacency_mask(j)
        for i in range(j):
            buf = buf << 1 | (col >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chr(63 + buf))
                buf = filled = 0
    if filled:
        out.append(chr(63 + (buf << (6 - filled))))
    return "".join(out)


def read_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_GRAPH6_HEADER):
        s = s[len(_GRAPH6_HEADER):]
    n, used = _decode_size(s)
    if n < 0:
        raise FormatError("negative vertex count in graph6 prefix")
    body = s[used:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise FormatError(f"graph6 body for n = {n} needs {need} characters, got {len(body)}")
    bits = 0
    for c in body:
        v = ord(c) - 63
        if not 0 <= v <= 63:
            raise FormatError(f"invalid graph6 character {c!r}")
        bits = bits << 6 | v
    total = need * 6
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits >> (total - 1 - pos) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return Graph(n, rows)


def load_graph(path: str, fmt: str = "edgelist") -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    if fmt == "edgelist":
        return read_edge_list(text)
    if fmt == "graph6":
        return read_graph6(text)
    raise FormatError(f"unknown graph format {fmt!r}")


def save_graph(g: Graph, path: str, fmt: str = "edgelist") -> None:
    text = write_edge_list(g) if fmt == "edgelist" else write_graph6(g) + "\n"
    if fmt not in ("edgelist", "graph6"):
        raise FormatError(f"unknown graph format {fmt!r}")
    with open(path, "w", encoding="ascii") as fh:
        fh.write(text)
