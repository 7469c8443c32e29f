"""Minor and topological-minor containment with certificates; planarity.

``find_minor`` searches over contraction sequences.  When both graphs are
connected every minor model can be grown to cover all of ``g`` (a leftover
vertex always has a path into some branch set), so it suffices to contract
``g`` down to ``|V(h)|`` vertices and look for ``h`` as a spanning subgraph.
Each intermediate quotient carries its branch sets, and quotients already
shown minor-free are remembered by canonical key.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .canon import canonical_key
from .graph import MAX_VERTICES, SimpleGraph, SizeError, contract_edge, iter_bits

DEFAULT_BUDGET = int(os.environ.get("OCTMINOR_BUDGET", "5000000"))


class SearchBudgetExceeded(RuntimeError):
    """The node ceiling was hit before the search could decide."""


@dataclass(frozen=True)
class MinorModel:
    branch_sets: tuple[frozenset[int], ...]

    def to_text(self) -> str:
        return "\n".join(
            f"h{x}: " + " ".join(str(v) for v in sorted(b)) for x, b in enumerate(self.branch_sets)
        )


@dataclass(frozen=True)
class SubdivisionModel:
    branch_vertices: tuple[int, ...]
    paths: dict[tuple[int, int], tuple[int, ...]]

    def to_text(self) -> str:
        return "\n".join(
            f"h{x}-h{y}: " + " ".join(map(str, p)) for (x, y), p in sorted(self.paths.items())
        )

    def as_minor_model(self, n_h: int) -> MinorModel:
        """Fold each path's interior into its first endpoint's branch set."""
        sets = [{v} for v in self.branch_vertices[:n_h]]
        for (x, _y), path in self.paths.items():
            sets[x].update(path[1:-1])
        return MinorModel(tuple(frozenset(s) for s in sets))


def _guard(*graphs: SimpleGraph) -> None:
    for g in graphs:
        if g.n > MAX_VERTICES:
            raise SizeError(f"minor search is limited to {MAX_VERTICES} vertices")


def _capped_dominates(g: SimpleGraph, h: SimpleGraph, cap: int = 3) -> bool:
    # a branch set of H-degree d >= 1 needs a vertex of G-degree >= min(d, 3)
    gd = sorted((min(d, cap) for d in g.degrees()), reverse=True)
    hd = sorted((min(d, cap) for d in h.degrees()), reverse=True)
    return len(gd) >= len(hd) and all(a >= b for a, b in zip(gd, hd))


def _spanning_embedding(q: SimpleGraph, h: SimpleGraph) -> list[int] | None:
    """Bijection phi with phi(x)phi(y) in E(q) for every xy in E(h), or None."""
    n = h.n
    qdeg = q.degrees()
    hdeg = h.degrees()
    if q.m < h.m:
        return None
    if any(a < b for a, b in zip(sorted(qdeg, reverse=True), sorted(hdeg, reverse=True))):
        return None
    # place high-degree vertices first, then keep the placed set connected
    order: list[int] = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        frontier = [x for x in remaining if h.rows[x] & placed] or list(remaining)
        x = max(frontier, key=lambda y: ((h.rows[y] & placed).bit_count(), hdeg[y], -y))
        order.append(x)
        placed |= 1 << x
        remaining.discard(x)
    phi = [-1] * n
    used = 0
    qrows = q.rows

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        x = order[i]
        need = 0
        for y in iter_bits(h.rows[x]):
            if phi[y] >= 0:
                need |= 1 << phi[y]
        for c in range(q.n):
            if used >> c & 1 or qdeg[c] < hdeg[x]:
                continue
            if qrows[c] & need != need:
                continue
            phi[x] = c
            used |= 1 << c
            if extend(i + 1):
                return True
            used &= ~(1 << c)
            phi[x] = -1
        return False

    return phi if extend(0) else None


class _MinorSearch:
    def __init__(self, h: SimpleGraph, allow_delete: bool, budget: int):
        self.h = h
        self.k = h.n
        self.allow_delete = allow_delete
        self.budget = budget
        self.nodes = 0
        self.dead: set = set()

    def run(self, q: SimpleGraph, branches: tuple[int, ...]) -> tuple[int, ...] | None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceeded(f"minor search exceeded {self.budget} nodes")
        h, k = self.h, self.k
        if q.n == k:
            phi = _spanning_embedding(q, h)
            if phi is None:
                return None
            return tuple(branches[phi[x]] for x in range(k))
        slack = q.n - k
        if self.allow_delete:
            if q.m < h.m:
                return None
        elif q.m - slack < h.m:
            return None
        if not _capped_dominates(q, h):
            return None
        key = canonical_key(q)
        if key in self.dead:
            return None
        seen = set()
        for child, child_branches in self._children(q, branches):
            ck = canonical_key(child)
            if ck in seen or ck in self.dead:
                continue
            seen.add(ck)
            found = self.run(child, child_branches)
            if found is not None:
                return found
        self.dead.add(key)
        return None

    def _children(self, q: SimpleGraph, branches: tuple[int, ...]):
        rows = q.rows
        edges = sorted(q.edges(), key=lambda e: ((rows[e[0]] & rows[e[1]]).bit_count(), e))
        for u, v in edges:
            merged = list(branches)
            merged[u] = branches[u] | branches[v]
            del merged[v]
            yield contract_edge(q, (u, v)), tuple(merged)
        if self.allow_delete:
            for v in sorted(range(q.n), key=lambda x: (q.degree(x), x)):
                rest = [x for x in range(q.n) if x != v]
                yield q.induced(rest), tuple(branches[x] for x in rest)


def find_minor(g: SimpleGraph, h: SimpleGraph, budget: int | None = None) -> MinorModel | None:
    """A minor model of ``h`` in ``g`` or ``None``.  Exhaustive within ``budget`` nodes."""
    _guard(g, h)
    budget = DEFAULT_BUDGET if budget is None else budget
    if h.n == 0:
        return MinorModel(())
    if g.n < h.n or g.m < h.m or not _capped_dominates(g, h):
        return None
    if h.is_connected():
        for comp in g.component_masks():
            if comp.bit_count() < h.n:
                continue
            verts = list(iter_bits(comp))
            sub = g.induced(verts)
            if sub.m < h.m:
                continue
            search = _MinorSearch(h, allow_delete=False, budget=budget)
            found = search.run(sub, tuple(1 << i for i in range(sub.n)))
            budget -= search.nodes
            if found is not None:
                return _lift(found, verts)
        return None
    search = _MinorSearch(h, allow_delete=True, budget=budget)
    found = search.run(g, tuple(1 << i for i in range(g.n)))
    return None if found is None else _lift(found, list(range(g.n)))


def _lift(branch_masks: tuple[int, ...], verts: list[int]) -> MinorModel:
    return MinorModel(tuple(frozenset(verts[i] for i in iter_bits(m)) for m in branch_masks))


def has_minor(g: SimpleGraph, h: SimpleGraph, budget: int | None = None) -> bool:
    return find_minor(g, h, budget) is not None


def verify_model(g: SimpleGraph, h: SimpleGraph, model: MinorModel) -> bool:
    """Check a minor certificate directly from the definitions."""
    sets = [set(b) for b in model.branch_sets]
    if len(sets) != h.n:
        return False
    seen: set[int] = set()
    for b in sets:
        if not b or not b <= set(range(g.n)) or b & seen:
            return False
        seen |= b
        start = next(iter(b))
        reach = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y in b and y not in reach:
                    reach.add(y)
                    stack.append(y)
        if reach != b:
            return False
    for x, y in h.edges():
        if not any(g.has_edge(a, b) for a in sets[x] for b in sets[y]):
            return False
    return True


def verify_subdivision(g: SimpleGraph, h: SimpleGraph, model: SubdivisionModel) -> bool:
    bv = model.branch_vertices
    if len(bv) != h.n or len(set(bv)) != h.n or set(model.paths) != set(h.edges()):
        return False
    interiors: set[int] = set()
    for (x, y), path in model.paths.items():
        if len(path) < 2 or path[0] != bv[x] or path[-1] != bv[y]:
            return False
        if len(set(path)) != len(path):
            return False
        if any(not g.has_edge(a, b) for a, b in zip(path, path[1:])):
            return False
        inner = set(path[1:-1])
        if inner & set(bv) or inner & interiors:
            return False
        interiors |= inner
    return True


def find_topological_minor(
    g: SimpleGraph, h: SimpleGraph, budget: int | None = None
) -> SubdivisionModel | None:
    """A subdivision of ``h`` inside ``g`` or ``None``; exhaustive."""
    _guard(g, h)
    budget = DEFAULT_BUDGET if budget is None else budget
    if h.n == 0:
        return SubdivisionModel((), {})
    if h.n > g.n or h.m > g.m or h.max_degree() > g.max_degree():
        return None
    gdeg = g.degrees()
    hdeg = h.degrees()
    if any(a < b for a, b in zip(sorted(gdeg, reverse=True), sorted(hdeg, reverse=True))):
        return None
    # a subdivision is in particular a minor, and that search is far cheaper to refute
    if find_minor(g, h, budget) is None:
        return None

    order: list[int] = []
    placed = 0
    remaining = set(range(h.n))
    while remaining:
        frontier = [x for x in remaining if h.rows[x] & placed] or list(remaining)
        x = max(frontier, key=lambda y: ((h.rows[y] & placed).bit_count(), hdeg[y], -y))
        order.append(x)
        placed |= 1 << x
        remaining.discard(x)

    phi = [-1] * h.n
    paths: dict[tuple[int, int], tuple[int, ...]] = {}
    state = {"used": 0, "nodes": 0}
    grows = g.rows

    def tick() -> None:
        state["nodes"] += 1
        if state["nodes"] > budget:
            raise SearchBudgetExceeded(f"subdivision search exceeded {budget} nodes")

    def free_capacity_ok() -> bool:
        # every mapped branch vertex needs a distinct free exit per unrouted edge
        used = state["used"]
        for x in range(h.n):
            if phi[x] < 0:
                continue
            pending = sum(1 for y in iter_bits(h.rows[x]) if (min(x, y), max(x, y)) not in paths)
            if not pending:
                continue
            exits = 0
            for w in iter_bits(grows[phi[x]]):
                if not used >> w & 1:
                    exits += 1
                else:
                    y = phi.index(w) if w in phi else -1
                    if y >= 0 and (min(x, y), max(x, y)) not in paths:
                        exits += 1
            if exits < pending:
                return False
        return True

    def routes(a: int, b: int):
        # simple a-b paths whose interior avoids used vertices
        stack = [(a, (a,), 1 << a)]
        while stack:
            v, path, on = stack.pop()
            for w in sorted(iter_bits(grows[v]), reverse=True):
                if w == b:
                    yield path + (b,)
                elif not (state["used"] >> w & 1) and not on >> w & 1:
                    stack.append((w, path + (w,), on | 1 << w))

    def route_edges(i: int, pending: list[int]) -> bool:
        if not pending:
            return place(i + 1)
        x = order[i]
        y = pending[0]
        e = (min(x, y), max(x, y))
        a, b = phi[e[0]], phi[e[1]]
        for path in routes(a, b):
            tick()
            inner = 0
            for w in path[1:-1]:
                inner |= 1 << w
            state["used"] |= inner
            paths[e] = path
            if free_capacity_ok() and route_edges(i, pending[1:]):
                return True
            del paths[e]
            state["used"] &= ~inner
        return False

    def place(i: int) -> bool:
        if i == h.n:
            return True
        x = order[i]
        back = [y for y in order[:i] if h.rows[x] >> y & 1]
        for c in range(g.n):
            if state["used"] >> c & 1 or gdeg[c] < hdeg[x]:
                continue
            tick()
            phi[x] = c
            state["used"] |= 1 << c
            if free_capacity_ok() and route_edges(i, back):
                return True
            state["used"] &= ~(1 << c)
            phi[x] = -1
        return False

    if not place(0):
        return None
    return SubdivisionModel(tuple(phi), dict(paths))


# -- planarity -------------------------------------------------------------


@dataclass(frozen=True)
class KuratowskiWitness:
    name: str  # "K5" or "K3,3"
    model: MinorModel


def _k5() -> SimpleGraph:
    return SimpleGraph.from_edges(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])


def _k33() -> SimpleGraph:
    return SimpleGraph.from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)])


def _minor_witness(g: SimpleGraph, budget: int | None) -> KuratowskiWitness | None:
    for name, h in (("K3,3", _k33()), ("K5", _k5())):
        model = find_minor(g, h, budget)
        if model is not None:
            return KuratowskiWitness(name, model)
    return None


def _kuratowski_from_subgraph(g: SimpleGraph, sub_edges: list[tuple[int, int]]) -> KuratowskiWitness:
    adj: dict[int, set[int]] = {}
    for u, v in sub_edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    branch = sorted(v for v, nb in adj.items() if len(nb) >= 3)
    is_branch = set(branch)
    sets: dict[int, set[int]] = {b: {b} for b in branch}
    links: set[tuple[int, int]] = set()
    for b in branch:
        for first in sorted(adj[b]):
            prev, cur, inner = b, first, []
            while cur not in is_branch:
                inner.append(cur)
                prev, cur = cur, next(w for w in adj[cur] if w != prev)
            if b < cur:
                sets[b].update(inner)
                links.add((b, cur))
    if len(branch) == 5:
        name, hv = "K5", branch
    else:
        # two-colour the branch vertices to match K3,3's parts {0,1,2} | {3,4,5}
        colour = {branch[0]: 0}
        stack = [branch[0]]
        while stack:
            x = stack.pop()
            for a, b in links:
                y = b if a == x else a if b == x else None
                if y is not None and y not in colour:
                    colour[y] = 1 - colour[x]
                    stack.append(y)
        name = "K3,3"
        hv = [b for b in branch if colour[b] == 0] + [b for b in branch if colour[b] == 1]
    return KuratowskiWitness(name, MinorModel(tuple(frozenset(sets[b]) for b in hv)))


def is_planar(g: SimpleGraph, witness: bool = False, method: str = "auto", budget: int | None = None):
    """Planarity by Wagner's criterion (no K5 and no K3,3 minor).

    ``method="minor"`` decides by the minor engine alone; ``"auto"`` decides
    with a linear-time embedding test and certifies non-planarity with a
    Kuratowski subgraph folded into a minor model.  With ``witness=True``
    returns ``(planar, KuratowskiWitness | None)``.
    """
    n, m = g.n, g.m
    result: tuple[bool, KuratowskiWitness | None]
    # a Kuratowski subdivision has cycle rank at least 4
    if n <= 4 or m - n + len(g.component_masks()) <= 3:
        result = (True, None)
    elif method == "minor" or (n >= 3 and m > 3 * n - 6):
        wit = _minor_witness(g, budget)
        result = (wit is None, wit)
    elif method == "auto":
        import networkx as nx

        nxg = nx.Graph()
        nxg.add_nodes_from(range(n))
        nxg.add_edges_from(g.edges())
        planar, cert = nx.check_planarity(nxg, counterexample=True)
        if planar:
            result = (True, None)
        else:
            result = (False, _kuratowski_from_subgraph(g, [tuple(e) for e in cert.edges()]))
    else:
        raise ValueError(f"unknown planarity method {method!r}")
    if result[1] is not None:
        h = _k5() if result[1].name == "K5" else _k33()
        if not verify_model(g, h, result[1].model):
            raise AssertionError("planarity witness failed verification")
    return result if witness else result[0]
