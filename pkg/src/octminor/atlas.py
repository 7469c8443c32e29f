"""Named graphs, generated families and the small-graph census."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations
from pathlib import Path
from typing import Callable, Iterable, Iterator

from .canon import CanonicalKey, canonical_key
from .connectivity import (
    DomainError,
    is_cubic,
    is_cyclically_4_connected_cubic,
    is_k_connected,
    is_separating_triangle,
)
from .graph import SimpleGraph, delete_vertex, line_graph, triangles
from .io import decode_graph6, encode_graph6
from .minors import is_planar
from .transforms import SplitSpec, add_handle, apply_split, apply_sum, handle_pairs, special_3sum, SumSpec

# -- elementary families -----------------------------------------------------


def complete(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    return SimpleGraph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle(n: int) -> SimpleGraph:
    if n < 3:
        raise DomainError("cycles need at least 3 vertices")
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def cycle_square(n: int) -> SimpleGraph:
    """Vertices ``i`` and ``j`` adjacent iff their cycle distance is 1 or 2."""
    if n < 3:
        raise DomainError("squared cycles need at least 3 vertices")
    edges = {tuple(sorted((i, (i + d) % n))) for i in range(n) for d in (1, 2)}
    return SimpleGraph.from_edges(n, [e for e in edges if e[0] != e[1]])


def wheel(n: int) -> SimpleGraph:
    """Hub 0, rim 1..n."""
    if n < 3:
        raise DomainError("wheels need at least 3 spokes")
    rim = [(1 + i, 1 + (i + 1) % n) for i in range(n)]
    return SimpleGraph.from_edges(n + 1, rim + [(0, i) for i in range(1, n + 1)])


def prism() -> SimpleGraph:
    return SimpleGraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def cube() -> SimpleGraph:
    return SimpleGraph.from_edges(8, [(a, a | 1 << b) for a in range(8) for b in range(3) if not a >> b & 1])


def octahedron() -> SimpleGraph:
    """K_{2,2,2}; the non-adjacent pairs are (0,1), (2,3), (4,5)."""
    return SimpleGraph.from_edges(6, [(i, j) for i, j in combinations(range(6), 2) if i // 2 != j // 2])


def v8() -> SimpleGraph:
    return SimpleGraph.from_edges(8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)])


# Vertex 0 of the octahedron has neighbours 2, 4, 3, 5 in cyclic order.
OCT1_SPLIT = SplitSpec(0, frozenset({2, 4}), frozenset({3, 5}), 3)
OCT2_SPLIT = SplitSpec(0, frozenset({2, 3}), frozenset({4, 5}), 3)


def _oct_plus_split(spec: SplitSpec, planar: bool) -> SimpleGraph:
    g = apply_split(octahedron(), spec)
    if g.m != 13 or not is_k_connected(g, 3) or is_planar(g) != planar:
        raise AssertionError("octahedron split does not have the expected shape")
    return g


@lru_cache(maxsize=None)
def _base_graphs() -> dict[str, SimpleGraph]:
    text = resources.files("octminor").joinpath("data/base_graphs.txt").read_text()
    out = {}
    for block in re.split(r"\n\s*\n", text):
        lines = [ln.strip() for ln in block.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not lines:
            continue
        name, n = lines[0].split(":")
        edges = [tuple(map(int, ln.split())) for ln in lines[1:]]
        out[name.strip()] = SimpleGraph.from_edges(int(n), edges)
    return out


# -- names -------------------------------------------------------------------

_FIXED: dict[str, Callable[[], SimpleGraph]] = {
    "Prism": prism,
    "Cube": cube,
    "Oct": octahedron,
    "Oct\\e": lambda: octahedron().remove_edges([(0, 2)]),
    "Oct+": lambda: octahedron().add_edges([(0, 1)]),
    "Oct1+": lambda: _oct_plus_split(OCT1_SPLIT, planar=True),
    "Oct2+": lambda: _oct_plus_split(OCT2_SPLIT, planar=False),
    "V8": v8,
    "K5^": lambda: apply_sum(prism(), complete(5), SumSpec(3, ((0, 0), (1, 1), (2, 2)))),
    **{name: (lambda name=name: _base_graphs()[name]) for name in ("L4'", "L5", "L5'", "L5''", "P10")},
}

_ALIASES = {
    "OCT": "Oct",
    "OCT-E": "Oct\\e",
    "OCT\\E": "Oct\\e",
    "OCT+": "Oct+",
    "OCT1+": "Oct1+",
    "OCT2+": "Oct2+",
    "OCT+1": "Oct1+",
    "OCT+2": "Oct2+",
    "K5^△": "K5^",
    "K5TRI": "K5^",
    "PETERSEN": "P10",
}


_SUBSCRIPTS = str.maketrans("₀₁₂₃₄₅₆₇₈₉", "0123456789")


def _canonical_name(name: str) -> str:
    s = name.strip().replace("²", "^2").translate(_SUBSCRIPTS).replace("⁺", "+")
    s = s.replace("′", "'").replace("″", "''").replace(" ", "")
    for fixed in _FIXED:
        if s.upper() == fixed.upper():
            return fixed
    return _ALIASES.get(s.upper(), s)


def build(name: str) -> SimpleGraph:
    """Build a named graph.

    Accepted forms: ``Kn``, ``Km,n``, ``Cn``, ``Cn^2``, ``Wn``, ``Prism``,
    ``Cube``, ``Oct``, ``Oct\\e``, ``Oct+``, ``Oct1+``, ``Oct2+``, ``V8``,
    ``P10``, ``L4'``, ``L5``, ``L5'``, ``L5''``, ``K5^`` and ``L(<name>)``
    for the line graph of any of these.
    """
    s = _canonical_name(name)
    if s in _FIXED:
        return _FIXED[s]()
    m = re.fullmatch(r"L\((.+)\)", s)
    if m:
        return line_graph(build(m.group(1)))
    m = re.fullmatch(r"K(\d+),(\d+)", s, re.IGNORECASE)
    if m:
        return complete_bipartite(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"K(\d+)", s, re.IGNORECASE)
    if m:
        return complete(int(m.group(1)))
    m = re.fullmatch(r"C(\d+)\^2", s, re.IGNORECASE)
    if m:
        return cycle_square(int(m.group(1)))
    m = re.fullmatch(r"C(\d+)", s, re.IGNORECASE)
    if m:
        return cycle(int(m.group(1)))
    m = re.fullmatch(r"W(\d+)", s, re.IGNORECASE)
    if m:
        return wheel(int(m.group(1)))
    raise DomainError(f"unknown graph name {name!r}")


NAMES = tuple(_FIXED) + ("K<n>", "K<m>,<n>", "C<n>", "C<n>^2", "W<n>", "L(<name>)")


# -- catalogs ----------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    key: CanonicalKey
    graph: SimpleGraph
    provenance: str


class Catalog:
    """Graphs up to isomorphism, each with a replayable generation path.

    Provenance grammar (space separated steps): a base ``name`` or ``g6:<str>``,
    then ``s3:a,b,c[/d-e;...]`` (special 3-sum with a fresh K4 over the
    triangle ``abc``, deleting the listed edges) or ``h:a-b,c-d`` (handle
    on edges ``ab`` and ``cd``).
    """

    def __init__(self) -> None:
        self._entries: dict[CanonicalKey, CatalogEntry] = {}
        self.truncated = False

    def add(self, g: SimpleGraph, provenance: str) -> bool:
        key = canonical_key(g)
        if key in self._entries:
            return False
        self._entries[key] = CatalogEntry(key, g, provenance)
        return True

    def __contains__(self, item: SimpleGraph | CanonicalKey) -> bool:
        key = item if isinstance(item, CanonicalKey) else canonical_key(item)
        return key in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(sorted(self._entries.values(), key=lambda e: e.key))

    def keys(self) -> set[CanonicalKey]:
        return set(self._entries)

    def graphs(self) -> list[SimpleGraph]:
        return [e.graph for e in self]

    def get(self, item: SimpleGraph | CanonicalKey) -> CatalogEntry | None:
        key = item if isinstance(item, CanonicalKey) else canonical_key(item)
        return self._entries.get(key)

    def save(self, graph6_path: str | Path, provenance_path: str | Path | None = None) -> None:
        graph6_path = Path(graph6_path)
        provenance_path = Path(provenance_path or graph6_path.with_suffix(graph6_path.suffix + ".prov"))
        entries = list(self)
        graph6_path.write_text("".join(encode_graph6(e.graph) + "\n" for e in entries))
        provenance_path.write_text("".join(f"{e.key.graph6()}\t{e.provenance}\n" for e in entries))

    @classmethod
    def load(cls, graph6_path: str | Path, provenance_path: str | Path | None = None) -> "Catalog":
        graph6_path = Path(graph6_path)
        provenance_path = Path(provenance_path or graph6_path.with_suffix(graph6_path.suffix + ".prov"))
        cat = cls()
        graphs = [decode_graph6(ln) for ln in graph6_path.read_text().splitlines() if ln.strip()]
        provs = [ln.split("\t", 1)[1] for ln in provenance_path.read_text().splitlines() if ln.strip()]
        for g, p in zip(graphs, provs):
            cat.add(g, p)
        return cat


def replay(provenance: str) -> SimpleGraph:
    steps = provenance.split()
    head = steps[0]
    g = decode_graph6(head[3:]) if head.startswith("g6:") else build(head)
    for step in steps[1:]:
        kind, _, arg = step.partition(":")
        if kind == "s3":
            tri, _, dels = arg.partition("/")
            t = tuple(map(int, tri.split(",")))
            deletions = [tuple(map(int, d.split("-"))) for d in dels.split(";") if d]
            g = special_3sum(g, t, complete(4), (0, 1, 2), deletions)
        elif kind == "h":
            e1, e2 = (tuple(map(int, e.split("-"))) for e in arg.split(","))
            g = add_handle(g, e1, e2)
        else:
            raise DomainError(f"unknown provenance step {step!r}")
    return g


def _fmt_s3(t: tuple[int, int, int], deletions: Iterable[tuple[int, int]]) -> str:
    dels = ";".join(f"{a}-{b}" for a, b in deletions)
    return f"s3:{t[0]},{t[1]},{t[2]}" + (f"/{dels}" if dels else "")


def gen_cubic_cyc4(max_steps: int, max_vertices: int = 64) -> Catalog:
    """Breadth-first handle closure of {K3,3, Cube}, kept cyclically 4-connected."""
    if max_steps < 0:
        raise DomainError("max_steps must be non-negative")
    cat = Catalog()
    frontier = []
    for name in ("K3,3", "Cube"):
        g = build(name)
        cat.add(g, name)
        frontier.append((g, name))
    for _ in range(max_steps):
        nxt = []
        for g, prov in frontier:
            if g.n + 2 > max_vertices:
                cat.truncated = True
                continue
            for e1, e2 in handle_pairs(g):
                h = add_handle(g, e1, e2)
                if not is_cyclically_4_connected_cubic(h):
                    continue
                p = f"{prov} h:{e1[0]}-{e1[1]},{e2[0]}-{e2[1]}"
                if cat.add(h, p):
                    nxt.append((h, p))
        frontier = nxt
    return cat


@lru_cache(maxsize=None)
def gen_special_3sum_K4(max_vertices: int, allow_deletions: bool = False) -> Catalog:
    """Closure of {K4} under special 3-sums with a fresh K4.

    With ``allow_deletions`` every subset of the shared triangle's edges may
    be removed after gluing.
    """
    if max_vertices < 4:
        raise DomainError("max_vertices must be at least 4")
    cat = Catalog()
    k4 = complete(4)
    cat.add(k4, "K4")
    frontier = [(k4, "K4")]
    while frontier:
        nxt = []
        for g, prov in frontier:
            if g.n >= max_vertices:
                continue
            for t in triangles(g):
                if is_separating_triangle(g, t):
                    continue
                shared = [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]
                options = [()]
                if allow_deletions:
                    options = [c for r in range(4) for c in combinations(shared, r)]
                for dels in options:
                    h = special_3sum(g, t, k4, (0, 1, 2), dels)
                    p = f"{prov} {_fmt_s3(t, dels)}"
                    if cat.add(h, p):
                        nxt.append((h, p))
        frontier = nxt
    return cat


def is_special_3sum_K4(g: SimpleGraph, allow_deletions: bool = False) -> bool:
    """Membership in the closure built by :func:`gen_special_3sum_K4`, without building it.

    The fresh K4 of the last sum leaves a degree-3 vertex; removing it and
    restoring its triangle must give an earlier member in which that
    triangle does not separate.
    """
    return _in_k4_closure(canonical_key(g), allow_deletions)


@lru_cache(maxsize=None)
def _in_k4_closure(key: CanonicalKey, allow_deletions: bool) -> bool:
    g = key.graph()
    if g.n < 4 or g.m != 3 * g.n - 6 and not allow_deletions:
        return False
    if g.n == 4:
        return g.m == 6
    for w in range(g.n):
        if g.degree(w) != 3:
            continue
        t = tuple(g.neighbors(w))
        sides = list(combinations(t, 2))
        if not allow_deletions and not all(g.has_edge(*e) for e in sides):
            continue
        prev = delete_vertex(g.add_edges([e for e in sides if not g.has_edge(*e)]), w)
        t_prev = tuple(x - (x > w) for x in t)
        if is_separating_triangle(prev, t_prev):
            continue
        if _in_k4_closure(canonical_key(prev), allow_deletions):
            return True
    return False


# -- census ------------------------------------------------------------------

CENSUS_MAX = 8


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[SimpleGraph, ...]:
    """Canonical representatives of every graph on ``n <= 7`` vertices."""
    if n == 0:
        return (SimpleGraph.empty(0),)
    seen: dict[CanonicalKey, SimpleGraph] = {}
    for parent in _all_graphs(n - 1):
        for mask in range(1 << (n - 1)):
            g = _augment(parent, mask)
            key = canonical_key(g)
            if key not in seen:
                seen[key] = key.graph()
    return tuple(seen[k] for k in sorted(seen))


def _augment(parent: SimpleGraph, mask: int) -> SimpleGraph:
    n = parent.n
    rows = [r | ((mask >> v & 1) << n) for v, r in enumerate(parent.rows)] + [mask]
    return SimpleGraph._trusted(n + 1, rows)


def gen_all_graphs(
    n: int,
    predicate: Callable[[SimpleGraph], bool] | None = None,
    *,
    min_degree: int = 0,
    num_edges: int | None = None,
) -> Catalog:
    """Every graph on ``n`` vertices up to isomorphism that satisfies ``predicate``.

    ``min_degree`` and ``num_edges`` are prefilters applied before
    canonisation; they must be implied by the predicate you care about.
    """
    if n > CENSUS_MAX:
        raise DomainError(f"census is limited to n <= {CENSUS_MAX}")
    cat = Catalog()

    def consider(g: SimpleGraph) -> None:
        if g.n and g.min_degree() < min_degree:
            return
        if num_edges is not None and g.m != num_edges:
            return
        if cat.get(g) is None and (predicate is None or predicate(g)):
            rep = canonical_key(g).graph()
            cat.add(rep, "g6:" + encode_graph6(rep))

    if n < CENSUS_MAX:
        for g in _all_graphs(n):
            consider(g)
        return cat
    # n == 8: extend 7-vertex graphs by one vertex; every 8-vertex graph arises
    for parent in _all_graphs(n - 1):
        pdeg = parent.degrees()
        if num_edges is not None and not 0 <= num_edges - parent.m <= n - 1:
            continue
        forced = 0
        feasible = True
        for v, d in enumerate(pdeg):
            if d < min_degree:
                if d + 1 < min_degree:
                    feasible = False
                    break
                forced |= 1 << v
        if not feasible:
            continue
        for mask in range(1 << (n - 1)):
            if mask & forced != forced or mask.bit_count() < min_degree:
                continue
            if num_edges is not None and parent.m + mask.bit_count() != num_edges:
                continue
            consider(_augment(parent, mask))
    return cat


def census(max_n: int, predicate: Callable[[SimpleGraph], bool] | None = None, **prefilters) -> list[SimpleGraph]:
    """Concatenated census for ``1 <= n <= max_n``."""
    out: list[SimpleGraph] = []
    for n in range(1, max_n + 1):
        out.extend(gen_all_graphs(n, predicate, **prefilters).graphs())
    return out


def is_4_connected(g: SimpleGraph) -> bool:
    return is_k_connected(g, 4)


def check_named(name: str) -> list[str]:
    """Validation failures for a named graph (empty when it passes)."""
    g = build(name)
    problems = []
    expect: dict[str, Callable[[SimpleGraph], bool]] = {
        "Oct1+": lambda x: x.m == 13 and is_planar(x) and is_k_connected(x, 3),
        "Oct2+": lambda x: x.m == 13 and not is_planar(x) and is_k_connected(x, 3),
        "Oct": lambda x: x.n == 6 and all(d == 4 for d in x.degrees()),
        "V8": lambda x: x.n == 8 and x.m == 12 and is_cubic(x),
        "Cube": lambda x: x.n == 8 and is_cubic(x) and is_planar(x),
        "P10": lambda x: x.n == 10 and is_cubic(x) and _girth(x) == 5,
        "L5": lambda x: is_planar(x) and is_k_connected(x, 3),
    }
    check = expect.get(_canonical_name(name))
    if check is not None and not check(g):
        problems.append(f"{name} fails its validation predicate")
    return problems


def _girth(g: SimpleGraph) -> int:
    best = g.n + 1
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        for x in queue:
            for y in g.neighbors(x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best
