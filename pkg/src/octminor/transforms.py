"""Constructive moves: vertex splits, clique sums, handles, extensions, chains."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

from .canon import CanonicalKey, canonical_key
from .connectivity import DomainError, is_k_connected, is_separating_triangle
from .graph import SimpleGraph, contract_edge, iter_bits, norm_edge, subdivide_edge
from .minors import DEFAULT_BUDGET, SearchBudgetExceeded


class ConsistencyError(AssertionError):
    """A result contradicts a property the construction guarantees."""


# -- splits ----------------------------------------------------------------


@dataclass(frozen=True)
class SplitSpec:
    v: int
    A: frozenset[int]
    B: frozenset[int]
    arity: int

    def validate(self, g: SimpleGraph) -> None:
        if self.arity not in (3, 4):
            raise DomainError(f"split arity must be 3 or 4, got {self.arity}")
        if not 0 <= self.v < g.n:
            raise DomainError(f"vertex {self.v} not in graph")
        nbrs = frozenset(g.neighbors(self.v))
        if not (self.A <= nbrs and self.B <= nbrs) or self.A | self.B != nbrs:
            raise DomainError("split sides must cover exactly the neighbourhood")
        least = 2 if self.arity == 3 else 3
        if min(len(self.A), len(self.B)) < least:
            raise DomainError(f"{self.arity}-split sides need at least {least} vertices")
        if self.arity == 3 and self.A & self.B:
            raise DomainError("3-split sides must be disjoint")


def apply_split(g: SimpleGraph, s: SplitSpec, verify: bool = True) -> SimpleGraph:
    """Replace ``s.v`` by adjacent ``v'`` (keeps the label) and ``v''`` (label ``n``)."""
    s.validate(g)
    if verify and s.arity == 4 and not is_k_connected(g, 4):
        raise DomainError("4-splits apply to 4-connected graphs")
    v, w = s.v, g.n
    rows = list(g.rows) + [0]
    for u in iter_bits(g.rows[v]):
        rows[u] &= ~(1 << v)
    rows[v] = 0
    for u in s.A:
        rows[v] |= 1 << u
        rows[u] |= 1 << v
    for u in s.B:
        rows[w] |= 1 << u
        rows[u] |= 1 << w
    rows[v] |= 1 << w
    rows[w] |= 1 << v
    out = SimpleGraph(g.n + 1, rows)
    if verify and s.arity == 4 and not is_k_connected(out, 4):
        raise ConsistencyError(f"4-split {s} of a 4-connected graph is not 4-connected")
    return out


def split_specs(g: SimpleGraph, v: int, arity: int) -> list[SplitSpec]:
    """All specs at ``v`` with unordered sides."""
    nbrs = g.neighbors(v)
    least = 2 if arity == 3 else 3
    choices = (0, 1) if arity == 3 else (0, 1, 2)  # 0: A only, 1: B only, 2: both
    out = []
    seen = set()
    for pick in product(choices, repeat=len(nbrs)):
        A = frozenset(u for u, c in zip(nbrs, pick) if c != 1)
        B = frozenset(u for u, c in zip(nbrs, pick) if c != 0)
        if min(len(A), len(B)) < least:
            continue
        pair = tuple(sorted((tuple(sorted(A)), tuple(sorted(B)))))
        if pair in seen:
            continue
        seen.add(pair)
        out.append(SplitSpec(v, frozenset(pair[0]), frozenset(pair[1]), arity))
    return out


def enumerate_splits(g: SimpleGraph, arity: int) -> list[SplitSpec]:
    """One spec per isomorphism class of split results, over all vertices."""
    if arity not in (3, 4):
        raise DomainError(f"split arity must be 3 or 4, got {arity}")
    seen: set[CanonicalKey] = set()
    out = []
    for v in range(g.n):
        for s in split_specs(g, v, arity):
            key = canonical_key(apply_split(g, s, verify=False))
            if key not in seen:
                seen.add(key)
                out.append(s)
    return out


# -- sums ------------------------------------------------------------------


@dataclass(frozen=True)
class SumSpec:
    k: int
    identification: tuple[tuple[int, int], ...]  # (vertex of g1, vertex of g2)
    deletions: frozenset[tuple[int, int]] = frozenset()  # edges in g1 labels


def _is_clique(g: SimpleGraph, verts: Sequence[int]) -> bool:
    return all(g.has_edge(a, b) for a, b in combinations(verts, 2))


def apply_sum(g1: SimpleGraph, g2: SimpleGraph, s: SumSpec) -> SimpleGraph:
    """Glue ``g2`` onto ``g1`` along a shared clique.

    ``g1`` keeps its labels; the private vertices of ``g2`` follow in
    ascending order.
    """
    if not 0 <= s.k <= 3 or len(s.identification) != s.k:
        raise DomainError(f"a {s.k}-sum needs {s.k} identified vertex pairs")
    if g1.n <= s.k or g2.n <= s.k:
        raise DomainError(f"summands of a {s.k}-sum need more than {s.k} vertices")
    left = [a for a, _ in s.identification]
    right = [b for _, b in s.identification]
    if len(set(left)) != s.k or len(set(right)) != s.k:
        raise DomainError("identification must be injective")
    if not all(0 <= a < g1.n for a in left) or not all(0 <= b < g2.n for b in right):
        raise DomainError("identified vertex outside its graph")
    if not _is_clique(g1, left) or not _is_clique(g2, right):
        raise DomainError("identified vertices must span a clique in both summands")
    common = {norm_edge(a, b) for a, b in combinations(left, 2)}
    deletions = {norm_edge(*e) for e in s.deletions}
    if not deletions <= common:
        raise DomainError("only common edges may be deleted")
    to_g1 = dict((b, a) for a, b in s.identification)
    nxt = g1.n
    for b in range(g2.n):
        if b not in to_g1:
            to_g1[b] = nxt
            nxt += 1
    edges = set(g1.edges())
    edges.update(norm_edge(to_g1[a], to_g1[b]) for a, b in g2.edges())
    edges -= deletions
    return SimpleGraph.from_edges(nxt, edges)


def special_3sum(
    g1: SimpleGraph,
    t1: Sequence[int],
    g2: SimpleGraph,
    t2: Sequence[int],
    deletions: Iterable[Sequence[int]] = (),
) -> SimpleGraph:
    """3-sum over triangles that are non-separating in both summands."""
    for g, t in ((g1, t1), (g2, t2)):
        if len(t) != 3 or not _is_clique(g, t):
            raise DomainError(f"{tuple(t)} is not a triangle")
        if is_separating_triangle(g, t):
            raise DomainError(f"triangle {tuple(t)} is separating")
    spec = SumSpec(3, tuple(zip(t1, t2)), frozenset(norm_edge(*e) for e in deletions))
    return apply_sum(g1, g2, spec)


# -- handles and extensions --------------------------------------------------


def add_handle(g: SimpleGraph, e1: Sequence[int], e2: Sequence[int]) -> SimpleGraph:
    """Subdivide two nonadjacent edges and join the new vertices (``n``, ``n+1``)."""
    e1, e2 = norm_edge(*e1), norm_edge(*e2)
    if not (g.has_edge(*e1) and g.has_edge(*e2)):
        raise DomainError("handle edges must be present")
    if set(e1) & set(e2):
        raise DomainError("handle edges must be nonadjacent")
    h = subdivide_edge(subdivide_edge(g, e1), e2)
    return h.add_edges([(g.n, g.n + 1)])


def handle_pairs(g: SimpleGraph) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    edges = g.edges()
    return [(a, b) for a, b in combinations(edges, 2) if not set(a) & set(b)]


def enumerate_extensions(h: SimpleGraph, kinds: Sequence[str] = ("edge", "split3")) -> list[SimpleGraph]:
    """One graph per isomorphism class of single-edge additions and 3-splits."""
    seen: set[CanonicalKey] = set()
    out = []

    def offer(g: SimpleGraph) -> None:
        key = canonical_key(g)
        if key not in seen:
            seen.add(key)
            out.append(g)

    if "edge" in kinds:
        for u, v in combinations(range(h.n), 2):
            if not h.has_edge(u, v):
                offer(h.add_edges([(u, v)]))
    if "split3" in kinds:
        for v in range(h.n):
            for s in split_specs(h, v, 3):
                offer(apply_split(h, s, verify=False))
    return out


# -- contraction chains ------------------------------------------------------


@dataclass(frozen=True)
class Chain:
    graphs: tuple[SimpleGraph, ...]
    edges: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.edges)

    def verify(self) -> bool:
        if len(self.graphs) != len(self.edges) + 1:
            return False
        if not all(is_k_connected(g, 4) for g in self.graphs):
            return False
        return all(
            g.has_edge(*e) and contract_edge(g, e) == nxt
            for g, e, nxt in zip(self.graphs, self.edges, self.graphs[1:])
        )


def find_chain(
    g: SimpleGraph, targets: Iterable[CanonicalKey], budget: int | None = None
) -> Chain | None:
    """A chain of 4-connected contractions from ``g`` to a target class.

    Exhaustive: failed classes are remembered by canonical key, so ``None``
    means no chain exists.
    """
    if not is_k_connected(g, 4):
        raise DomainError("chains start from a 4-connected graph")
    budget = DEFAULT_BUDGET if budget is None else budget
    goal = set(targets)
    floor = min((k.n for k in goal), default=g.n + 1)
    dead: set[CanonicalKey] = set()
    nodes = 0

    def descend(cur: SimpleGraph) -> list | None:
        nonlocal nodes
        key = canonical_key(cur)
        if key in goal:
            return [(cur, None)]
        if cur.n <= floor or key in dead:
            return None
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(f"chain search exceeded {budget} nodes")
        options = {}
        for e in cur.edges():
            nxt = contract_edge(cur, e)
            k = canonical_key(nxt)
            if k not in options and k not in dead and is_k_connected(nxt, 4):
                options[k] = (e, nxt)
        for k in sorted(options):
            e, nxt = options[k]
            rest = descend(nxt)
            if rest is not None:
                return [(cur, e)] + rest
        dead.add(key)
        return None

    found = descend(g)
    if found is None:
        return None
    return Chain(tuple(x for x, _ in found), tuple(e for _, e in found[:-1]))
