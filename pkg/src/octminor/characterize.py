"""Structural deciders for the octahedron-split characterizations.

None of these deciders calls the minor engine: membership is established
by squared-cycle recognition, line-graph root recovery, contraction chains,
catalog lookups and clique-sum decomposition.  That keeps agreement with
``find_minor`` a genuine two-sided test.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .atlas import build, cycle_square, is_special_3sum_K4
from .canon import CanonicalKey, canonical_key
from .connectivity import DomainError, is_cubic, is_cyclically_4_connected_cubic, is_k_connected
from .graph import SimpleGraph, iter_bits, line_graph, norm_edge
from .io import encode_graph6
from .minors import is_planar
from .transforms import Chain, SumSpec, apply_sum, find_chain

# -- class C and class L -------------------------------------------------------


@dataclass(frozen=True)
class CLOutcome:
    kind: str  # "C", "L" or "neither"
    n: int | None = None
    root: SimpleGraph | None = None


def squared_cycle_order(g: SimpleGraph) -> int | None:
    """``n`` if ``g`` is isomorphic to the squared cycle on ``n >= 5`` vertices."""
    if g.n < 5 or any(d != 4 for d in g.degrees()):
        return None
    return g.n if canonical_key(g) == canonical_key(cycle_square(g.n)) else None


def krausz_triangle_partitions(g: SimpleGraph):
    """Partitions of E(g) into triangles covering every vertex exactly twice."""
    if any(d != 4 for d in g.degrees()):
        return
    edges = g.edges()
    rows = g.rows
    used: set[tuple[int, int]] = set()
    count = [0] * g.n
    chosen: list[tuple[int, int, int]] = []

    def extend():
        free = next((e for e in edges if e not in used), None)
        if free is None:
            yield list(chosen)
            return
        a, b = free
        for c in iter_bits(rows[a] & rows[b]):
            tri = tuple(sorted((a, b, c)))
            sides = [norm_edge(tri[0], tri[1]), norm_edge(tri[0], tri[2]), norm_edge(tri[1], tri[2])]
            if any(s in used for s in sides) or any(count[x] >= 2 for x in tri):
                continue
            used.update(sides)
            for x in tri:
                count[x] += 1
            chosen.append(tri)
            yield from extend()
            chosen.pop()
            for x in tri:
                count[x] -= 1
            used.difference_update(sides)

    yield from extend()


def cubic_root(g: SimpleGraph) -> SimpleGraph | None:
    """A cubic cyclically 4-connected ``H`` with ``L(H)`` isomorphic to ``g``."""
    if g.n % 3:
        return None
    for part in krausz_triangle_partitions(g):
        owners: dict[int, list[int]] = {}
        for i, tri in enumerate(part):
            for x in tri:
                owners.setdefault(x, []).append(i)
        root = SimpleGraph.from_edges(len(part), [tuple(owners[x]) for x in range(g.n)])
        if root.m != g.n or not is_cubic(root):
            continue
        if not is_cyclically_4_connected_cubic(root):
            continue
        if canonical_key(line_graph(root)) != canonical_key(g):
            raise AssertionError("Krausz root does not reproduce the graph")
        return root
    return None


def classify_C_or_L(g: SimpleGraph) -> CLOutcome:
    n = squared_cycle_order(g)
    if n is not None:
        return CLOutcome("C", n=n)
    root = cubic_root(g)
    if root is not None:
        return CLOutcome("L", root=root)
    return CLOutcome("neither")


# -- results -----------------------------------------------------------------


@dataclass
class ClassificationResult:
    verdict: bool
    reason: str
    certificate: object = None
    detail: str = ""

    def to_text(self) -> str:
        lines = [f"verdict: {'member' if self.verdict else 'non-member'}", f"reason: {self.reason}"]
        if self.detail:
            lines.append(f"detail: {self.detail}")
        cert = self.certificate
        if isinstance(cert, Chain):
            for g, e in zip(cert.graphs, list(cert.edges) + [None]):
                lines.append(f"chain: {encode_graph6(g)}" + (f" contract {e[0]}-{e[1]}" if e else ""))
        elif isinstance(cert, SimpleGraph):
            lines.append(f"certificate: {encode_graph6(cert)}")
        elif isinstance(cert, DecompositionNode):
            lines.extend("tree: " + ln for ln in cert.to_text().splitlines())
        return "\n".join(lines)


def _require_4_connected(g: SimpleGraph) -> None:
    if not is_k_connected(g, 4):
        raise DomainError("this characterization applies to 4-connected graphs")


@lru_cache(maxsize=None)
def _key(name: str) -> CanonicalKey:
    return canonical_key(build(name))


def _odd_square_k(g: SimpleGraph) -> int | None:
    n = squared_cycle_order(g)
    return (n - 1) // 2 if n is not None and n % 2 == 1 else None


def decide_oct1_free_4connected(g: SimpleGraph, budget: int | None = None) -> ClassificationResult:
    """Member iff ``g`` is C6^2, an odd squared cycle, or contracts to C5^2 by a 4-connected chain."""
    _require_4_connected(g)
    key = canonical_key(g)
    if key == _key("C6^2"):
        return ClassificationResult(True, "is-C6^2", g)
    k = _odd_square_k(g)
    if k is not None:
        return ClassificationResult(True, f"is-odd-cycle-square({k})", g)
    chain = find_chain(g, {_key("C5^2")}, budget)
    if chain is not None:
        return ClassificationResult(True, "chain-to-C5^2", chain, f"length {len(chain)}")
    return ClassificationResult(False, "no-chain-to-C5^2", g)


def decide_oct2_free_4connected(g: SimpleGraph, budget: int | None = None) -> ClassificationResult:
    """Member iff ``g`` is planar, an odd squared cycle, L(K3,3), or chains to C5^2."""
    _require_4_connected(g)
    if is_planar(g):
        return ClassificationResult(True, "is-planar", g)
    k = _odd_square_k(g)
    if k is not None:
        return ClassificationResult(True, f"is-odd-cycle-square({k})", g)
    if canonical_key(g) == _key("L(K3,3)"):
        return ClassificationResult(True, "is-L(K3,3)", g)
    chain = find_chain(g, {_key("C5^2")}, budget)
    if chain is not None:
        return ClassificationResult(True, "chain-to-C5^2", chain, f"length {len(chain)}")
    return ClassificationResult(False, "no-chain-to-C5^2", g)


# -- 0/1/2-sum decomposition ---------------------------------------------------


@dataclass
class DecompositionNode:
    """A piece (leaf) or a sum of two sub-decompositions.

    ``vertices`` lists the original labels of the piece's vertices, so the
    piece's local vertex ``i`` is ``vertices[i]``.  ``virtual`` holds edges
    (original labels) added to a piece that are absent from the input.
    """

    vertices: tuple[int, ...]
    graph: SimpleGraph
    kind: str = "leaf"  # "leaf", "0-sum", "1-sum", "2-sum"
    cut: tuple[int, ...] = ()
    kept: bool = True  # 2-sums: whether the cut edge survives in the parent
    children: list["DecompositionNode"] = field(default_factory=list)
    virtual: frozenset[tuple[int, int]] = frozenset()

    def leaves(self) -> list["DecompositionNode"]:
        if self.kind == "leaf":
            return [self]
        return [x for c in self.children for x in c.leaves()]

    def to_text(self, depth: int = 0) -> str:
        pad = "  " * depth
        if self.kind == "leaf":
            return f"{pad}leaf {list(self.vertices)} {encode_graph6(self.graph)}"
        head = f"{pad}{self.kind} on {list(self.cut)}" + ("" if self.kept else " (cut edge deleted)")
        return "\n".join([head] + [c.to_text(depth + 1) for c in self.children])


def _two_cut(g: SimpleGraph) -> tuple[int, int] | None:
    full = g.full_mask
    for u, v in combinations(range(g.n), 2):
        if not g.is_connected(full & ~(1 << u) & ~(1 << v)):
            return u, v
    return None


def _cut_vertex(g: SimpleGraph) -> int | None:
    for v in range(g.n):
        if not g.is_connected(g.full_mask & ~(1 << v)):
            return v
    return None


def decompose_012(g: SimpleGraph) -> DecompositionNode:
    """Split recursively along components, cut vertices and 2-cuts.

    2-cuts add the cut edge to both sides.  Cuts are chosen
    lexicographically least; the side holding the smallest remaining
    vertex becomes the first child.
    """
    return _decompose(g, tuple(range(g.n)), frozenset())


def _piece(g: SimpleGraph, verts: tuple[int, ...], local_mask: int, extra_edge=None):
    local = sorted(iter_bits(local_mask))
    sub = g.induced(local)
    if extra_edge is not None:
        a, b = (local.index(x) for x in extra_edge)
        sub = sub.add_edges([(a, b)])
    return sub, tuple(verts[i] for i in local)


def _decompose(g: SimpleGraph, verts: tuple[int, ...], virtual: frozenset) -> DecompositionNode:
    full = g.full_mask
    comps = g.component_masks()
    if len(comps) > 1:
        first = comps[0]
        a, va = _piece(g, verts, first)
        b, vb = _piece(g, verts, full & ~first)
        return DecompositionNode(
            verts, g, "0-sum", (), True,
            [_decompose(a, va, _restrict(virtual, va)), _decompose(b, vb, _restrict(virtual, vb))],
            virtual,
        )
    if g.n >= 3:
        c = _cut_vertex(g)
        if c is not None:
            rest = g.component_masks(full & ~(1 << c))
            first = rest[0] | 1 << c
            second = (full & ~rest[0]) | 1 << c
            a, va = _piece(g, verts, first)
            b, vb = _piece(g, verts, second)
            return DecompositionNode(
                verts, g, "1-sum", (verts[c],), True,
                [_decompose(a, va, _restrict(virtual, va)), _decompose(b, vb, _restrict(virtual, vb))],
                virtual,
            )
    if g.n >= 4:
        cut = _two_cut(g)
        if cut is not None:
            u, v = cut
            pair = (1 << u) | (1 << v)
            rest = g.component_masks(full & ~pair)
            first = rest[0] | pair
            second = (full & ~rest[0]) | pair
            kept = g.has_edge(u, v)
            edge = norm_edge(verts[u], verts[v])
            a, va = _piece(g, verts, first, (u, v))
            b, vb = _piece(g, verts, second, (u, v))
            child_virtual = virtual if kept else virtual | {edge}
            return DecompositionNode(
                verts, g, "2-sum", (verts[u], verts[v]), kept,
                [_decompose(a, va, _restrict(child_virtual, va)), _decompose(b, vb, _restrict(child_virtual, vb))],
                virtual,
            )
    return DecompositionNode(verts, g, virtual=virtual)


def _restrict(virtual: frozenset, verts: tuple[int, ...]) -> frozenset:
    s = set(verts)
    return frozenset(e for e in virtual if e[0] in s and e[1] in s)


def reassemble(node: DecompositionNode) -> tuple[SimpleGraph, tuple[int, ...]]:
    """Rebuild a node's graph from its leaves by the recorded sums.

    Returns the graph and the original label of each of its vertices.
    """
    if node.kind == "leaf":
        return node.graph, node.vertices
    (ga, va), (gb, vb) = (reassemble(c) for c in node.children)
    pos_a = {x: i for i, x in enumerate(va)}
    pos_b = {x: i for i, x in enumerate(vb)}
    ident = tuple((pos_a[x], pos_b[x]) for x in node.cut)
    k = len(node.cut)
    dels = frozenset()
    if k == 2 and not node.kept:
        dels = frozenset({norm_edge(*(p for p, _ in ident))})
    out = apply_sum(ga, gb, SumSpec(k, ident, dels))
    labels = list(va) + [x for x in vb if x not in pos_a]
    # relabel the sum onto sorted original labels so it matches the input slice
    order = sorted(range(len(labels)), key=lambda i: labels[i])
    perm = [0] * len(labels)
    for new, old in enumerate(order):
        perm[old] = new
    return out.relabel(perm), tuple(sorted(labels))


# -- planar Oct1+-free graphs -------------------------------------------------

PLANAR_BASE = ("K1", "K2", "K3", "Oct", "L5")


def decide_oct1_free_planar(g: SimpleGraph, allow_deletions: bool = True) -> ClassificationResult:
    """Member iff every 0/1/2-sum piece is a base graph or a K4 special-3-sum.

    ``allow_deletions`` selects the K4 closure whose 3-sums may drop shared
    triangle edges.
    """
    if not is_planar(g):
        raise DomainError("this characterization applies to planar graphs")
    tree = decompose_012(g)
    base = {_key(name): name for name in PLANAR_BASE}
    for leaf in tree.leaves():
        piece = leaf.graph
        if canonical_key(piece) in base or is_special_3sum_K4(piece, allow_deletions):
            continue
        return ClassificationResult(False, "decomposition", tree, f"piece {encode_graph6(piece)} is not a base graph")
    return ClassificationResult(True, "decomposition", tree)

