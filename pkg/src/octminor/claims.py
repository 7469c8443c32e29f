"""Reproduction harness: every checkable statement as a named claim.

Each claim returns a pass/fail verdict with evidence lines.  Reports are
deterministic text; runtimes go only into the optional JSON summary.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Callable

from .atlas import (
    build,
    census,
    complete,
    cycle_square,
    gen_all_graphs,
    gen_cubic_cyc4,
    gen_special_3sum_K4,
    is_4_connected,
)
from .canon import canonical_key, is_isomorphic
from .characterize import (
    decide_oct1_free_4connected,
    decide_oct1_free_planar,
    decide_oct2_free_4connected,
)
from .connectivity import is_k_connected, non_separating_triangles
from .graph import SimpleGraph, contract_edge, line_graph
from .io import encode_graph6
from .minors import find_minor, is_planar, verify_model
from .transforms import SplitSpec, SumSpec, apply_split, apply_sum, enumerate_extensions, enumerate_splits, split_specs

SEED = 20240601


@dataclass
class ClaimReport:
    claim_id: str
    status: str  # "pass", "fail" or "skipped"
    evidence: list[str] = field(default_factory=list)
    runtime: float = 0.0
    reason: str = ""

    def to_text(self) -> str:
        head = f"[{self.status.upper()}] {self.claim_id}"
        if self.reason:
            head += f" ({self.reason})"
        return "\n".join([head] + ["    " + ln for ln in self.evidence])


@dataclass(frozen=True)
class Claim:
    claim_id: str
    criterion: int
    summary: str
    check: Callable[[bool], tuple[bool, list[str]]]
    slow_only: bool = False


def _g6(g: SimpleGraph) -> str:
    return encode_graph6(g)


def _has(g: SimpleGraph, name: str) -> bool:
    model = find_minor(g, build(name))
    if model is not None and not verify_model(g, build(name), model):
        raise AssertionError(f"invalid {name} model returned for {_g6(g)}")
    return model is not None


# -- contraction case analysis ----------------------------------------------------


def check_lkk33_cases(slow: bool) -> tuple[bool, list[str]]:
    g = build("L(K3,3)")
    first = {}
    for e in g.edges():
        h = contract_edge(g, e)
        first.setdefault(canonical_key(h), h)
    shapes = sorted((h.n, h.m) for h in first.values())
    second = {}
    for h in first.values():
        for e in h.edges():
            x = contract_edge(h, e)
            second.setdefault(canonical_key(x), x)
    counts = sorted(x.m for x in second.values())
    free = [not _has(x, "Oct2+") for x in second.values()]
    direct = not _has(g, "Oct2+")
    ev = [
        f"first contractions: {len(first)} class(es), shapes {shapes}",
        f"second contractions: {len(second)} classes, edge counts {counts}",
        *(f"  class {k.graph6()} m={x.m}" for k, x in sorted(second.items())),
        f"Oct2+-free classes: {sum(free)}/{len(free)}",
        f"direct search on L(K3,3): {'no Oct2+ minor' if direct else 'Oct2+ minor found'}",
    ]
    ok = shapes == [(8, 16)] and counts == [13, 13, 14, 14, 14, 15] and all(free) and direct
    return ok, ev


WITNESS_TABLE = (
    ("L(K3,3)", "Oct1+", True),
    ("L(Cube)", "Oct1+", True),
    ("L(V8)", "Oct2+", True),
    ("C8^2", "Oct1+", True),
    ("C6^2", "Oct1+", False),
    ("C7^2", "Oct", False),
    ("C9^2", "Oct", False),
)


def check_witness_table(slow: bool) -> tuple[bool, list[str]]:
    ok = True
    ev = []
    for gname, hname, expect in WITNESS_TABLE:
        g, h = build(gname), build(hname)
        model = find_minor(g, h)
        found = model is not None
        valid = not found or verify_model(g, h, model)
        ok &= found == expect and valid
        ev.append(f"{gname} >= {hname}: {'found' if found else 'none'} (expected {'found' if expect else 'none'})"
                  + ("" if valid else " INVALID MODEL"))
        if found:
            ev.append("  branch sets " + "; ".join(" ".join(map(str, sorted(b))) for b in model.branch_sets))
    return ok, ev


def check_c6sq_splits(slow: bool) -> tuple[bool, list[str]]:
    g = cycle_square(6)
    specs = enumerate_splits(g, 4)
    results = [apply_split(g, s) for s in specs]
    hits = [_has(h, "Oct1+") for h in results]
    ev = [f"4-split classes of C6^2: {len(specs)}", f"containing Oct1+: {sum(hits)}/{len(hits)}"]
    ev += [f"  {_g6(h)} A={sorted(s.A)} B={sorted(s.B)}" for s, h in zip(specs, results)]
    return bool(specs) and all(hits), ev


def check_oct_extensions(slow: bool) -> tuple[bool, list[str]]:
    oct_ = build("Oct")
    edges = enumerate_extensions(oct_, ("edge",))
    splits = enumerate_extensions(oct_, ("split3",))
    planar_splits = [h for h in splits if is_planar(h)]
    edge_ok = all(not is_planar(h) for h in edges)
    one = len(splits) == 2 and len(planar_splits) == 1 and is_isomorphic(planar_splits[0], build("Oct1+"))
    ev = [
        f"edge additions: {len(edges)} class(es), non-planar: {sum(not is_planar(h) for h in edges)}",
        f"3-splits: {len(splits)} classes, planar: {len(planar_splits)}",
        f"planar 3-split isomorphic to Oct1+: {bool(planar_splits) and is_isomorphic(planar_splits[0], build('Oct1+'))}",
    ]
    return edge_ok and one, ev


# -- census equivalence ---------------------------------------------------------------


def _four_connected_census(slow: bool) -> list[SimpleGraph]:
    out = census(7, is_4_connected, min_degree=4)
    if slow:
        out += gen_all_graphs(8, is_4_connected, min_degree=4).graphs()
    return out


def _census_compare(slow: bool, decide, target: str) -> tuple[int, int, list[str]]:
    graphs = _four_connected_census(slow)
    wrong_accept = []
    wrong_reject = []
    for g in graphs:
        verdict = decide(g).verdict
        free = not _has(g, target)
        if verdict and not free:
            wrong_accept.append(g)
        elif free and not verdict:
            wrong_reject.append(g)
    ev = [
        f"4-connected graphs checked: {len(graphs)} (n <= {8 if slow else 7})",
        f"decider member but {target} minor found: {len(wrong_accept)}",
        f"{target}-free but decider non-member: {len(wrong_reject)}",
    ]
    ev += [f"  accept-mismatch {_g6(g)} n={g.n} m={g.m}" for g in wrong_accept[:10]]
    ev += [f"  reject-mismatch {_g6(g)} n={g.n} m={g.m}" for g in wrong_reject[:10]]
    return len(wrong_accept), len(wrong_reject), ev


def check_census_oct1(slow: bool) -> tuple[bool, list[str]]:
    a, r, ev = _census_compare(slow, decide_oct1_free_4connected, "Oct1+")
    return a == 0 and r == 0, ev


def check_census_oct2(slow: bool) -> tuple[bool, list[str]]:
    a, r, ev = _census_compare(slow, decide_oct2_free_4connected, "Oct2+")
    return a == 0 and r == 0, ev


def check_census_necessity(slow: bool) -> tuple[bool, list[str]]:
    """Minor-free 4-connected graphs are always accepted by both deciders."""
    _, r1, ev1 = _census_compare(slow, decide_oct1_free_4connected, "Oct1+")
    _, r2, ev2 = _census_compare(slow, decide_oct2_free_4connected, "Oct2+")
    return r1 == 0 and r2 == 0, [ev1[0], ev1[2], ev2[2]]


def check_k7_counterexample(slow: bool) -> tuple[bool, list[str]]:
    """K7 chains to C5^2 through 4-splits yet contains both octahedron splits."""
    k5 = complete(5)
    k6 = apply_split(k5, SplitSpec(0, frozenset(range(1, 5)), frozenset(range(1, 5)), 4))
    k7 = apply_split(k6, SplitSpec(0, frozenset(range(1, 6)), frozenset(range(1, 6)), 4))
    ev = [
        f"K5 -> K6 -> K7 by 4-splits: {is_isomorphic(k7, complete(7))}",
        f"K7 contains Oct1+: {_has(k7, 'Oct1+')}, Oct2+: {_has(k7, 'Oct2+')}",
        f"decider verdicts: Oct1+-free={decide_oct1_free_4connected(k7).verdict}, "
        f"Oct2+-free={decide_oct2_free_4connected(k7).verdict}",
    ]
    ok = is_isomorphic(k7, complete(7)) and _has(k7, "Oct1+") and _has(k7, "Oct2+")
    return ok, ev


def check_planar_census(slow: bool) -> tuple[bool, list[str]]:
    graphs = census(7, is_planar)
    if slow:
        graphs += gen_all_graphs(8, is_planar).graphs()
    mism = {True: [], False: []}
    for g in graphs:
        free = not _has(g, "Oct1+")
        for variant in (True, False):
            if decide_oct1_free_planar(g, allow_deletions=variant).verdict != free:
                mism[variant].append(g)
    ev = [
        f"planar graphs checked: {len(graphs)} (n <= {8 if slow else 7})",
        f"mismatches, catalog with common-edge deletion: {len(mism[True])}",
        f"mismatches, catalog without deletion: {len(mism[False])}",
    ]
    ev += [f"  no-deletion mismatch {_g6(g)}" for g in mism[False][:5]]
    return not mism[True], ev


# -- randomized laws -----------------------------------------------------------------


def _cliques(g: SimpleGraph, k: int) -> list[tuple[int, ...]]:
    return [c for c in combinations(range(g.n), k) if all(g.has_edge(a, b) for a, b in combinations(c, 2))]


def _random_sum(rng: random.Random, g1: SimpleGraph, g2: SimpleGraph, k: int, delete: bool) -> SimpleGraph:
    c1 = rng.choice(_cliques(g1, k))
    c2 = list(rng.choice(_cliques(g2, k)))
    rng.shuffle(c2)
    common = list(combinations(c1, 2))
    dels = frozenset(e for e in common if delete and rng.random() < 0.5)
    return apply_sum(g1, g2, SumSpec(k, tuple(zip(c1, c2)), dels))


NONPLANAR_POOL = ("K5", "K3,3", "K6", "Oct2+", "V8", "P10", "K3,4", "Oct+")


def check_sum_laws(slow: bool) -> tuple[bool, list[str]]:
    rng = random.Random(SEED)
    small = census(6)
    planar = [g for g in small if g.n >= 4 and is_planar(g)]
    kconn = {k: [g for g in small if g.n > k and is_k_connected(g, k)] for k in range(4)}
    tri_planar = [g for g in census(7, lambda x: is_planar(x) and is_k_connected(x, 3)) if non_separating_triangles(g)]
    nonplanar = [build(name) for name in NONPLANAR_POOL]
    bad = {"planar-sum": 0, "nonplanar-sum": 0, "special-3sum": 0}
    for _ in range(60):
        k = rng.randrange(3)
        g1, g2 = rng.choice(planar), rng.choice(planar)
        bad["planar-sum"] += not is_planar(_random_sum(rng, g1, g2, k, delete=True))
    for _ in range(60):
        k = rng.randrange(4)
        g1 = rng.choice([g for g in nonplanar if _cliques(g, k)])
        g2 = rng.choice([g for g in kconn[k] if _cliques(g, k)])
        if rng.random() < 0.5:
            g1, g2 = g2, g1
        bad["nonplanar-sum"] += is_planar(_random_sum(rng, g1, g2, k, delete=False))
    for _ in range(80):
        g1, g2 = rng.choice(tri_planar), rng.choice(tri_planar)
        t1 = rng.choice(non_separating_triangles(g1))
        t2 = list(rng.choice(non_separating_triangles(g2)))
        rng.shuffle(t2)
        dels = frozenset(e for e in combinations(t1, 2) if rng.random() < 0.3)
        h = apply_sum(g1, g2, SumSpec(3, tuple(zip(t1, t2)), dels))
        bad["special-3sum"] += not is_planar(h)
    fig = apply_sum(complete(5), complete(4), SumSpec(3, ((0, 0), (1, 1), (2, 2))))
    fig_ok = not is_planar(fig) and not is_planar(build("K5^"))
    ev = [f"{kind}: {count} violation(s)" for kind, count in bad.items()]
    ev.append(f"K5 3-sum K4 non-planar: {not is_planar(fig)}; K5^ non-planar: {not is_planar(build('K5^'))}")
    ev.append("randomized constructions: 200")
    return not any(bad.values()) and fig_ok, ev


def _random_descendant(rng: random.Random, steps: int) -> tuple[SimpleGraph, list[str]]:
    g = cycle_square(5)
    path = []
    for _ in range(steps):
        v = rng.randrange(g.n)
        s = rng.choice(split_specs(g, v, 4))
        g = apply_split(g, s)
        path.append(f"{v}:{sorted(s.A)}|{sorted(s.B)}")
    return g, path


def check_split_descendants(slow: bool) -> tuple[bool, list[str]]:
    rng = random.Random(SEED + 1)
    not4 = []
    has1 = []
    has2 = []
    for _ in range(100):
        g, path = _random_descendant(rng, rng.randint(1, 3))
        if not is_4_connected(g):
            not4.append(g)
        if _has(g, "Oct1+"):
            has1.append(g)
        if _has(g, "Oct2+"):
            has2.append(g)
    ev = [
        "random C5^2 descendants by <= 3 4-splits: 100",
        f"not 4-connected: {len(not4)}",
        f"containing Oct1+: {len(has1)}",
        f"containing Oct2+: {len(has2)}",
    ]
    ev += [f"  example with Oct1+: {_g6(g)} n={g.n} m={g.m}" for g in has1[:3]]
    return not (not4 or has1 or has2), ev


def check_k_family(slow: bool) -> tuple[bool, list[str]]:
    cat = gen_special_3sum_K4(10)
    bad = [e.graph for e in cat if not (is_planar(e.graph) and is_k_connected(e.graph, 3)) or _has(e.graph, "Oct1+")]
    ev = [f"K4 special-3-sum closure up to 10 vertices (no deletion): {len(cat)} members",
          f"violations: {len(bad)}"]
    return not bad, ev


def check_handle_line_graphs(slow: bool) -> tuple[bool, list[str]]:
    cat = gen_cubic_cyc4(2)
    bad = [e for e in cat if not _has(line_graph(e.graph), "Oct1+")]
    ev = [f"handle closure of K3,3 and Cube, <= 2 handles: {len(cat)} cubic graphs",
          f"line graphs without Oct1+: {len(bad)}"]
    ev += [f"  {e.provenance}" for e in bad]
    return not bad, ev


def _random_graph(rng: random.Random, n: int, p: float) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def check_sanity(slow: bool) -> tuple[bool, list[str]]:
    rng = random.Random(SEED + 2)
    k6_minus = complete(6).remove_edges([(0, 1), (2, 3)])
    ident = {
        "C5^2 ~ K5": is_isomorphic(cycle_square(5), complete(5)),
        "C6^2 ~ Oct": is_isomorphic(cycle_square(6), build("Oct")),
        "Oct+ ~ K6 minus two independent edges": is_isomorphic(build("Oct+"), k6_minus),
        "C2k^2 planar for k = 3..8": all(is_planar(cycle_square(2 * k)) for k in range(3, 9)),
    }
    trips = 0
    failures = 0
    while trips < 500:
        g = _random_graph(rng, rng.randint(4, 9), rng.uniform(0.3, 0.8))
        v = rng.randrange(g.n)
        arity = rng.choice((3, 4))
        if not 3 <= g.degree(v) <= 7:
            continue
        specs = split_specs(g, v, arity)
        if not specs:
            continue
        s = rng.choice(specs)
        h = apply_split(g, s, verify=False)
        failures += contract_edge(h, (v, g.n)) != g
        trips += 1
    ev = [f"{name}: {ok}" for name, ok in ident.items()]
    ev.append(f"split/contract round trips: {trips}, failures: {failures}")
    return all(ident.values()) and failures == 0, ev


def check_thirteen_edge_count(slow: bool) -> tuple[bool, list[str]]:
    counts = {}
    for n in range(4, 9):
        counts[n] = len(gen_all_graphs(n, lambda g: is_k_connected(g, 3), min_degree=3, num_edges=13))
    total = sum(counts.values())
    ev = [f"3-connected 13-edge graphs by order: {counts}", f"total: {total} (expected 51)"]
    return total == 51, ev


CLAIMS: tuple[Claim, ...] = (
    Claim("lkk33-contraction-cases", 1, "L(K3,3) second contractions are Oct2+-free", check_lkk33_cases),
    Claim("minor-witness-table", 2, "named minor witnesses reproduce", check_witness_table),
    Claim("c6sq-4splits-contain-oct1", 3, "every 4-split of C6^2 has an Oct1+ minor", check_c6sq_splits),
    Claim("oct-single-extensions", 4, "edge additions and 3-splits of Oct", check_oct_extensions),
    Claim("census-oct1-4connected", 5, "Oct1+ decider agrees with minor oracle", check_census_oct1),
    Claim("census-oct2-4connected", 5, "Oct2+ decider agrees with minor oracle", check_census_oct2),
    Claim("census-necessity", 5, "minor-free graphs are always accepted", check_census_necessity),
    Claim("k7-chain-counterexample", 5, "K7 is a chain descendant of C5^2 with both minors", check_k7_counterexample),
    Claim("planar-census-oct1", 5, "planar decider agrees with minor oracle", check_planar_census),
    Claim("sum-planarity-laws", 6, "clique sums and planarity", check_sum_laws),
    Claim("split-descendants-oct-free", 7, "random 4-split descendants of C5^2", check_split_descendants),
    Claim("k4-3sum-family-sound", 7, "K4 special-3-sum closure members", check_k_family),
    Claim("handle-line-graphs-oct1", 7, "line graphs of handle closures", check_handle_line_graphs),
    Claim("sanity-identities", 8, "isomorphisms and split round trips", check_sanity),
    Claim("three-connected-13-edges", 9, "51 three-connected graphs with 13 edges", check_thirteen_edge_count,
          slow_only=True),
)


def claim_ids() -> list[str]:
    return [c.claim_id for c in CLAIMS]


def _run_one(args: tuple[str, bool]) -> ClaimReport:
    claim_id, slow = args
    claim = next(c for c in CLAIMS if c.claim_id == claim_id)
    if claim.slow_only and not slow:
        return ClaimReport(claim_id, "skipped", reason="needs --slow")
    start = time.perf_counter()
    ok, evidence = claim.check(slow)
    return ClaimReport(claim_id, "pass" if ok else "fail", evidence, time.perf_counter() - start)


def run_claims(ids: list[str] | None = None, slow: bool = False, workers: int = 1) -> list[ClaimReport]:
    """Run claims in registry order; results keep that order regardless of workers."""
    known = claim_ids()
    chosen = known if not ids else ids
    unknown = [c for c in chosen if c not in known]
    if unknown:
        raise KeyError(f"unknown claim id(s): {', '.join(unknown)}")
    jobs = [(c, slow) for c in chosen]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_one, jobs))
    return [_run_one(j) for j in jobs]


def render_report(reports: list[ClaimReport]) -> str:
    passed = sum(r.status == "pass" for r in reports)
    failed = sum(r.status == "fail" for r in reports)
    skipped = sum(r.status == "skipped" for r in reports)
    body = "\n".join(r.to_text() for r in reports)
    return f"{body}\nsummary: {passed} passed, {failed} failed, {skipped} skipped\n"


def summary_json(reports: list[ClaimReport]) -> str:
    return json.dumps([asdict(r) for r in reports], indent=2)


def exit_code(reports: list[ClaimReport]) -> int:
    return 1 if any(r.status == "fail" for r in reports) else 0
