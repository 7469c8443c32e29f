"""graph6, edge-list and DOT serialization."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, TextIO

from .graph import MAX_VERTICES, GraphError, SimpleGraph, SizeError


class FormatError(GraphError):
    pass


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise FormatError(f"graph6 cannot encode n={n}")


def encode_graph6(g: SimpleGraph) -> str:
    # upper triangle in column order: (0,1),(0,2),(1,2),(0,3),...
    bits = []
    rows = g.rows
    for j in range(1, g.n):
        rj = rows[j]
        for i in range(j):
            bits.append(rj >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        chunk = 0
        for b in bits[k:k + 6]:
            chunk = chunk << 1 | b
        body.append(chr(chunk + 63))
    return _encode_n(g.n) + "".join(body)


def decode_graph6(text: str) -> SimpleGraph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise FormatError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise FormatError(f"invalid graph6 character in {text!r}")
    if data[0] == 63:
        if len(data) >= 4 and data[1] == 63:
            raise FormatError("graph6 graphs above 258047 vertices are unsupported")
        if len(data) < 4:
            raise FormatError("truncated graph6 header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        payload = data[4:]
    else:
        n = data[0]
        payload = data[1:]
    need = n * (n - 1) // 2
    if len(payload) != (need + 5) // 6:
        raise FormatError(f"graph6 payload length {len(payload)} does not fit n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if payload[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return SimpleGraph.from_edges(n, edges)


def read_graph6_stream(lines: Iterable[str]) -> list[SimpleGraph]:
    return [decode_graph6(line) for line in lines if line.strip()]


def write_graph6_stream(graphs: Iterable[SimpleGraph], fh: TextIO) -> None:
    for g in graphs:
        fh.write(encode_graph6(g) + "\n")


def encode_edge_list(g: SimpleGraph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def decode_edge_list(text: str) -> SimpleGraph:
    tokens = [line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if not tokens or len(tokens[0]) != 2:
        raise FormatError("edge list must start with a line 'n m'")
    try:
        n, m = map(int, tokens[0])
        edges = [(int(a), int(b)) for a, b in tokens[1:]]
    except ValueError as exc:
        raise FormatError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise FormatError(f"edge list header says {m} edges, found {len(edges)}")
    if n > MAX_VERTICES:
        raise SizeError(f"graphs are limited to {MAX_VERTICES} vertices, got {n}")
    try:
        return SimpleGraph.from_edges(n, edges)
    except GraphError as exc:
        raise FormatError(f"malformed edge list: {exc}") from None


def encode_dot(g: SimpleGraph, name: str = "G") -> str:
    body = [f"  {v};" for v in range(g.n)] + [f"  {u} -- {v};" for u, v in g.edges()]
    return f"graph \"{name}\" {{\n" + "\n".join(body) + "\n}\n"


def parse_graph(text: str) -> SimpleGraph:
    """Parse a single graph given as graph6 or as an edge list."""
    stripped = text.strip()
    if not stripped:
        raise FormatError("empty input")
    first = stripped.splitlines()[0].split()
    if len(first) == 2 and all(t.isdigit() for t in first):
        return decode_edge_list(stripped)
    lines = [ln for ln in stripped.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise FormatError("expected a single graph6 line")
    return decode_graph6(lines[0])


def load_graph(path: str | Path) -> SimpleGraph:
    return parse_graph(Path(path).read_text())


def format_graph(g: SimpleGraph, fmt: str = "graph6") -> str:
    if fmt == "graph6":
        return encode_graph6(g) + "\n"
    if fmt == "edges":
        return encode_edge_list(g)
    if fmt == "dot":
        return encode_dot(g)
    raise FormatError(f"unknown output format {fmt!r}")
