"""Simple undirected graphs stored as bit rows.

Vertices are ``0..n-1``; row ``v`` is an int whose bit ``u`` is set iff
``uv`` is an edge.  Graphs are immutable values: every edit returns a new
graph and relabels to keep the vertex set contiguous.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graphs or references to absent elements."""


class NotFoundError(GraphError, KeyError):
    def __str__(self) -> str:  # KeyError quotes its message otherwise
        return str(self.args[0]) if self.args else ""


class SizeError(GraphError):
    """Raised when a graph exceeds the supported width."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class SimpleGraph:
    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int]):
        if n > MAX_VERTICES:
            raise SizeError(f"graphs are limited to {MAX_VERTICES} vertices, got {n}")
        if len(rows) != n:
            raise GraphError("row count does not match vertex count")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex outside 0..{n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not rows[u] >> v & 1:
                    raise GraphError(f"adjacency is not symmetric at {u},{v}")
        self.n = n
        self.rows = tuple(rows)
        self._hash = hash((n, self.rows))

    @classmethod
    def _trusted(cls, n: int, rows: Sequence[int]) -> "SimpleGraph":
        # skips validation; callers guarantee the invariants
        g = object.__new__(cls)
        g.n = n
        g.rows = tuple(rows)
        g._hash = hash((n, g.rows))
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "SimpleGraph":
        if n > MAX_VERTICES:
            raise SizeError(f"graphs are limited to {MAX_VERTICES} vertices, got {n}")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, rows)

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls.from_edges(n, ())

    # -- queries -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={self.edges()})"

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[Edge]:
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, row in enumerate(self.rows):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def component_masks(self, within: int | None = None) -> list[int]:
        """Connected components of the subgraph induced on ``within``."""
        remaining = self.full_mask if within is None else within
        comps = []
        rows = self.rows
        while remaining:
            seen = remaining & -remaining
            frontier = seen
            while frontier:
                grow = 0
                for v in iter_bits(frontier):
                    grow |= rows[v]
                frontier = grow & remaining & ~seen
                seen |= frontier
            comps.append(seen)
            remaining &= ~seen
        return comps

    def is_connected(self, within: int | None = None) -> bool:
        mask = self.full_mask if within is None else within
        return len(self.component_masks(mask)) <= 1

    def induced_edge_count(self, mask: int) -> int:
        return sum((self.rows[v] & mask).bit_count() for v in iter_bits(mask)) // 2

    def _require_edge(self, u: int, v: int) -> None:
        if not self.has_edge(u, v):
            raise NotFoundError(f"edge ({u}, {v}) not in graph")

    def _require_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise NotFoundError(f"vertex {v} not in graph")

    # -- edits -------------------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of 0..n-1")
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            out = 0
            for u in iter_bits(row):
                out |= 1 << perm[u]
            rows[perm[v]] = out
        return SimpleGraph._trusted(self.n, rows)

    def induced(self, vertices: Iterable[int]) -> "SimpleGraph":
        """Induced subgraph; vertices keep their relative order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            out = 0
            for u in iter_bits(self.rows[v]):
                if u in index:
                    out |= 1 << index[u]
            rows.append(out)
        return SimpleGraph._trusted(len(keep), rows)

    def add_edges(self, edges: Iterable[Sequence[int]]) -> "SimpleGraph":
        rows = list(self.rows)
        for u, v in edges:
            if u == v or not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"cannot add edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return SimpleGraph._trusted(self.n, rows)

    def remove_edges(self, edges: Iterable[Sequence[int]]) -> "SimpleGraph":
        rows = list(self.rows)
        for u, v in edges:
            self._require_edge(u, v)
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return SimpleGraph._trusted(self.n, rows)

    def add_vertices(self, count: int = 1) -> "SimpleGraph":
        return SimpleGraph(self.n + count, list(self.rows) + [0] * count)


def _drop_vertex_rows(rows: Sequence[int], v: int) -> list[int]:
    low = (1 << v) - 1
    out = []
    for u, row in enumerate(rows):
        if u == v:
            continue
        out.append((row & low) | ((row >> (v + 1)) << v))
    return out


def contract_edge(g: SimpleGraph, e: Sequence[int]) -> SimpleGraph:
    """Contract ``e`` and simplify.

    The merged vertex keeps the smaller endpoint's label; labels above the
    larger endpoint shift down by one.
    """
    u, v = norm_edge(*e)
    g._require_edge(u, v)
    rows = list(g.rows)
    for w in iter_bits(rows[v] & ~(1 << u)):
        rows[w] = (rows[w] & ~(1 << v)) | (1 << u)
    rows[u] = (rows[u] | rows[v]) & ~((1 << u) | (1 << v))
    return SimpleGraph._trusted(g.n - 1, _drop_vertex_rows(rows, v))


def delete_edge(g: SimpleGraph, e: Sequence[int]) -> SimpleGraph:
    return g.remove_edges([norm_edge(*e)])


def delete_vertex(g: SimpleGraph, v: int) -> SimpleGraph:
    g._require_vertex(v)
    return SimpleGraph._trusted(g.n - 1, _drop_vertex_rows(g.rows, v))


def delete_vertices(g: SimpleGraph, vertices: Iterable[int]) -> SimpleGraph:
    gone = set(vertices)
    for v in gone:
        g._require_vertex(v)
    return g.induced(v for v in range(g.n) if v not in gone)


def subdivide_edge(g: SimpleGraph, e: Sequence[int]) -> SimpleGraph:
    """Replace ``e`` by a 2-path through a new vertex labelled ``n``."""
    u, v = norm_edge(*e)
    g._require_edge(u, v)
    w = g.n
    rows = list(g.rows) + [(1 << u) | (1 << v)]
    rows[u] = (rows[u] & ~(1 << v)) | (1 << w)
    rows[v] = (rows[v] & ~(1 << u)) | (1 << w)
    return SimpleGraph(g.n + 1, rows)


def line_graph(g: SimpleGraph) -> SimpleGraph:
    """Vertex ``i`` of the result is ``g.edges()[i]``."""
    edges = g.edges()
    if not edges:
        raise GraphError("line graph of an edgeless graph is empty")
    at: dict[int, list[int]] = {}
    for i, (u, v) in enumerate(edges):
        at.setdefault(u, []).append(i)
        at.setdefault(v, []).append(i)
    pairs = set()
    for incident in at.values():
        pairs.update(combinations(incident, 2))
    return SimpleGraph.from_edges(len(edges), pairs)


def disjoint_union(g1: SimpleGraph, g2: SimpleGraph) -> SimpleGraph:
    shift = g1.n
    rows = list(g1.rows) + [r << shift for r in g2.rows]
    return SimpleGraph(g1.n + g2.n, rows)


def complement(g: SimpleGraph) -> SimpleGraph:
    full = g.full_mask
    return SimpleGraph._trusted(g.n, [full & ~r & ~(1 << v) for v, r in enumerate(g.rows)])


def triangles(g: SimpleGraph) -> list[tuple[int, int, int]]:
    out = []
    rows = g.rows
    for a in range(g.n):
        higher = rows[a] >> (a + 1) << (a + 1)
        for b in iter_bits(higher):
            for c in iter_bits(higher & rows[b] >> (b + 1) << (b + 1)):
                out.append((a, b, c))
    return out


def common_neighbors(g: SimpleGraph, u: int, v: int) -> int:
    return (g.rows[u] & g.rows[v]).bit_count()
