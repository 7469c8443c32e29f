"""Canonical labelling by individualisation and refinement.

The canonical form of a graph is the smallest graph6-order adjacency
bitstring over all leaves of the search tree, where each node refines an
ordered partition to an equitable one and then individualises a vertex of
the first non-singleton cell.  The tree depends only on the isomorphism
type of the input, so the minimum is a complete invariant.  Branches are
pruned with twin transpositions and with automorphisms discovered at
equal leaves.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import MAX_VERTICES, SimpleGraph, SizeError, iter_bits


@dataclass(frozen=True, order=True)
class CanonicalKey:
    n: int
    bits: int

    def graph(self) -> SimpleGraph:
        """The canonically labelled representative."""
        rows = [0] * self.n
        k = self.n * (self.n - 1) // 2 - 1
        for j in range(1, self.n):
            for i in range(j):
                if self.bits >> k & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                k -= 1
        return SimpleGraph(self.n, rows)

    def graph6(self) -> str:
        from .io import encode_graph6

        return encode_graph6(self.graph())

    def __str__(self) -> str:
        return self.graph6()


def _refine(rows: tuple[int, ...], cells: list[int]) -> list[int]:
    """Refine an ordered partition (list of cell masks) to an equitable one."""
    cells = list(cells)
    queue = list(cells)
    while queue:
        splitter = queue.pop(0)
        i = 0
        while i < len(cells):
            cell = cells[i]
            if cell & (cell - 1) == 0:
                i += 1
                continue
            groups: dict[int, int] = {}
            for v in iter_bits(cell):
                c = (rows[v] & splitter).bit_count()
                groups[c] = groups.get(c, 0) | (1 << v)
            if len(groups) == 1:
                i += 1
                continue
            parts = [groups[c] for c in sorted(groups)]
            cells[i:i + 1] = parts
            if cell in queue:
                queue.remove(cell)
            queue.extend(parts)
            i += len(parts)
    return cells


def _certificate(rows: tuple[int, ...], order: list[int]) -> int:
    cert = 0
    for j in range(1, len(order)):
        rj = rows[order[j]]
        for i in range(j):
            cert = cert << 1 | (rj >> order[i] & 1)
    return cert


class _Search:
    def __init__(self, g: SimpleGraph):
        self.rows = g.rows
        self.n = g.n
        self.best_cert: int | None = None
        self.best_order: list[int] | None = None
        self.first_order: list[int] | None = None
        self.generators: list[list[int]] = []

    def run(self) -> tuple[int, list[int]]:
        cells = _refine(self.rows, [(1 << self.n) - 1])
        self._node(cells, [])
        return self.best_cert, self.best_order

    def _leaf(self, cells: list[int]) -> None:
        order = [c.bit_length() - 1 for c in cells]
        cert = _certificate(self.rows, order)
        if self.first_order is None:
            self.first_order = order
            self.first_cert = cert
        elif cert == self.first_cert:
            self._add_automorphism(order, self.first_order)
        if self.best_cert is None or cert < self.best_cert:
            self.best_cert, self.best_order = cert, order
        elif cert == self.best_cert and order != self.best_order:
            self._add_automorphism(order, self.best_order)

    def _add_automorphism(self, src: list[int], dst: list[int]) -> None:
        gamma = [0] * self.n
        for a, b in zip(src, dst):
            gamma[a] = b
        self.generators.append(gamma)

    def _orbit_roots(self, fixed: list[int]) -> list[int]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.generators:
            if any(gamma[p] != p for p in fixed):
                continue
            for x, y in enumerate(gamma):
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
        return [find(x) for x in range(self.n)]

    def _node(self, cells: list[int], prefix: list[int]) -> None:
        idx = next((i for i, c in enumerate(cells) if c & (c - 1)), None)
        if idx is None:
            self._leaf(cells)
            return
        target = cells[idx]
        rows = self.rows
        tried: list[int] = []
        for v in iter_bits(target):
            if tried:
                if any((rows[u] & ~(1 << v)) == (rows[v] & ~(1 << u)) for u in tried):
                    continue
                if self.generators:
                    roots = self._orbit_roots(prefix)
                    if any(roots[u] == roots[v] for u in tried):
                        continue
            tried.append(v)
            child = cells[:idx] + [1 << v, target & ~(1 << v)] + cells[idx + 1:]
            self._node(_refine(rows, child), prefix + [v])


@lru_cache(maxsize=200_000)
def _canonical(g: SimpleGraph) -> tuple[int, tuple[int, ...]]:
    if g.n <= 1:
        return 0, tuple(range(g.n))
    cert, order = _Search(g).run()
    return cert, tuple(order)


def _guard(g: SimpleGraph) -> None:
    if g.n > MAX_VERTICES:
        raise SizeError(f"canonical forms are limited to {MAX_VERTICES} vertices")


def canonical_key(g: SimpleGraph) -> CanonicalKey:
    _guard(g)
    return CanonicalKey(g.n, _canonical(g)[0])


def canonical_order(g: SimpleGraph) -> tuple[int, ...]:
    """Vertices of ``g`` listed in canonical position order."""
    _guard(g)
    return _canonical(g)[1]


def canonical_form(g: SimpleGraph) -> SimpleGraph:
    order = canonical_order(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def is_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_key(g) == canonical_key(h)
