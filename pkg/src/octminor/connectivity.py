"""Vertex connectivity, cyclic edge connectivity of cubic graphs, triangles."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .graph import GraphError, SimpleGraph, iter_bits


class DomainError(GraphError):
    """An operation was applied outside its mathematical domain."""


@dataclass(frozen=True)
class CutWitness:
    kind: str  # "vertex-cut" or "cyclic-edge-cut"
    elements: tuple
    sides: tuple[frozenset[int], ...]


def _local_connectivity(g: SimpleGraph, s: int, t: int, cap: int | None = None):
    """Max number of internally disjoint s-t paths (s, t nonadjacent).

    Unit-capacity flow on the split digraph: vertex x becomes x_in -> x_out.
    Returns (value, source side of a minimum cut as a set of split nodes).
    """
    n = g.n
    # node ids: 2x = x_in, 2x+1 = x_out
    cap_map: dict[tuple[int, int], int] = {}
    adj: dict[int, list[int]] = {i: [] for i in range(2 * n)}

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap_map:
            adj[a].append(b)
            adj[b].append(a)
            cap_map.setdefault((b, a), 0)
        cap_map[(a, b)] = cap_map.get((a, b), 0) + c

    big = n + 1
    for x in range(n):
        arc(2 * x, 2 * x + 1, big if x in (s, t) else 1)
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)
    src, snk = 2 * s + 1, 2 * t
    flow = 0
    while cap is None or flow < cap:
        prev = {src: None}
        dq = deque([src])
        while dq and snk not in prev:
            a = dq.popleft()
            for b in adj[a]:
                if b not in prev and cap_map[(a, b)] > 0:
                    prev[b] = a
                    dq.append(b)
        if snk not in prev:
            return flow, set(prev)
        b = snk
        while prev[b] is not None:
            a = prev[b]
            cap_map[(a, b)] -= 1
            cap_map[(b, a)] += 1
            b = a
        flow += 1
    return flow, None


def vertex_connectivity(g: SimpleGraph, witness: bool = False):
    """Exact vertex connectivity.

    With ``witness=True`` returns ``(kappa, CutWitness | None)``; the witness
    is a minimum vertex cut, absent for complete graphs.
    """
    n = g.n
    if n < 2:
        raise DomainError("vertex connectivity needs at least two vertices")
    if g.m == n * (n - 1) // 2:
        return (n - 1, None) if witness else n - 1
    comps = g.component_masks()
    if len(comps) > 1:
        if not witness:
            return 0
        return 0, CutWitness("vertex-cut", (), tuple(frozenset(iter_bits(c)) for c in comps))
    best = g.min_degree()
    best_pair = None
    best_side = None
    for s in range(n):
        for t in range(s + 1, n):
            if g.has_edge(s, t):
                continue
            value, side = _local_connectivity(g, s, t, cap=best)
            if value < best:
                best, best_pair, best_side = value, (s, t), side
    if not witness:
        return best
    cut = _cut_from_side(g, best_pair, best_side, best)
    return best, cut


def _cut_from_side(g: SimpleGraph, pair, side, kappa: int) -> CutWitness:
    if pair is None or side is None:
        # min degree is attained at a vertex whose neighbourhood is a cut
        v = min(range(g.n), key=lambda x: (g.degree(x), x))
        cut = frozenset(g.neighbors(v))
    else:
        cut = frozenset(x for x in range(g.n) if 2 * x in side and 2 * x + 1 not in side)
    rest = g.full_mask & ~sum(1 << c for c in cut)
    comps = g.component_masks(rest)
    sides = tuple(frozenset(iter_bits(c)) for c in comps)
    assert len(cut) == kappa and len(comps) >= 2
    return CutWitness("vertex-cut", tuple(sorted(cut)), sides)


def is_k_connected(g: SimpleGraph, k: int) -> bool:
    """True iff ``g`` has more than ``k`` vertices and no cut of fewer than ``k`` vertices."""
    if g.n <= k:
        return False
    if k <= 0:
        return True
    if g.min_degree() < k:
        return False
    if k > 4:
        return vertex_connectivity(g) >= k
    full = g.full_mask
    for size in range(k):
        for cut in combinations(range(g.n), size):
            rest = full
            for c in cut:
                rest &= ~(1 << c)
            if not g.is_connected(rest):
                return False
    return True


def is_cubic(g: SimpleGraph) -> bool:
    return all(d == 3 for d in g.degrees())


def _has_circuit(g: SimpleGraph, comp: int) -> bool:
    return g.induced_edge_count(comp) >= comp.bit_count()


def cyclic_edge_cut(g: SimpleGraph, max_size: int = 3) -> CutWitness | None:
    """An edge cut of at most ``max_size`` edges leaving circuits on two sides."""
    edges = g.edges()
    for size in range(max_size + 1):
        for cut in combinations(edges, size):
            h = g.remove_edges(cut)
            comps = h.component_masks()
            if len(comps) < 2:
                continue
            cyclic = [c for c in comps if _has_circuit(h, c)]
            if len(cyclic) >= 2:
                first = cyclic[0]
                return CutWitness(
                    "cyclic-edge-cut",
                    cut,
                    (frozenset(iter_bits(first)), frozenset(iter_bits(g.full_mask & ~first))),
                )
    return None


def is_cyclically_4_connected_cubic(g: SimpleGraph, witness: bool = False):
    if not is_cubic(g):
        raise DomainError("cyclic connectivity is only defined here for cubic graphs")
    cut = None
    ok = is_k_connected(g, 2) and g.m - g.n + 1 >= 4
    if ok:
        cut = cyclic_edge_cut(g, 3)
        ok = cut is None
    return (ok, cut) if witness else ok


def is_separating_triangle(g: SimpleGraph, t) -> bool:
    a, b, c = sorted(t)
    if not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
        raise DomainError(f"{(a, b, c)} is not a triangle")
    rest = g.full_mask & ~((1 << a) | (1 << b) | (1 << c))
    if rest == 0:
        return False
    return not g.is_connected(rest)


def non_separating_triangles(g: SimpleGraph) -> list[tuple[int, int, int]]:
    from .graph import triangles

    return [t for t in triangles(g) if not is_separating_triangle(g, t)]
