from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

import pytest

from octminor.atlas import build, census
from octminor.canon import CanonicalKey, canonical_key
from octminor.graph import SimpleGraph, contract_edge, delete_edge, delete_vertex
from octminor.minors import (
    MinorModel,
    SearchBudgetExceeded,
    find_minor,
    find_topological_minor,
    has_minor,
    is_planar,
    verify_model,
    verify_subdivision,
)


@lru_cache(maxsize=None)
def minor_closure(key: CanonicalKey) -> frozenset:
    """Every minor class of a graph by exhaustive deletion and contraction (oracle)."""
    g = key.graph()
    out = {key}
    children = [delete_edge(g, e) for e in g.edges()] + [contract_edge(g, e) for e in g.edges()]
    children += [delete_vertex(g, v) for v in range(g.n)]
    for child in children:
        ck = canonical_key(child)
        if ck not in out:
            out |= minor_closure(ck)
    return frozenset(out)


TARGETS = ["K4", "K5", "K3,3", "Oct", "W4", "K2,3", "Prism", "C5", "Oct1+", "Oct2+"]


@pytest.fixture(scope="module")
def small_census():
    return census(7)


@pytest.mark.parametrize("target", TARGETS)
def test_find_minor_matches_closure_oracle(small_census, target):
    h = build(target)
    hk = canonical_key(h)
    for g in small_census:
        if g.n < h.n or g.m < h.m:
            continue
        expected = hk in minor_closure(canonical_key(g))
        model = find_minor(g, h)
        assert (model is not None) == expected, g.edges()
        if model is not None:
            assert verify_model(g, h, model)


def test_minor_monotone_under_edge_addition():
    rng = random.Random(2)
    h = build("K4")
    for g in census(6):
        missing = [e for e in combinations(range(g.n), 2) if not g.has_edge(*e)]
        if has_minor(g, h) and missing:
            assert has_minor(g.add_edges([rng.choice(missing)]), h)


def test_verify_model_rejects_bad_models():
    g = build("K5")
    h = build("K4")
    good = MinorModel((frozenset({0}), frozenset({1}), frozenset({2}), frozenset({3, 4})))
    assert verify_model(g, h, good)
    assert not verify_model(g, h, MinorModel((frozenset({0}), frozenset({0}), frozenset({2}), frozenset({3}))))
    assert not verify_model(g, h, MinorModel((frozenset({0}), frozenset(), frozenset({2}), frozenset({3}))))
    path = SimpleGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    # disconnected branch set {0, 2}
    assert not verify_model(path, SimpleGraph.from_edges(2, [(0, 1)]), MinorModel((frozenset({0, 2}), frozenset({1}))))


def test_verify_model_fuzz_against_direct_check():
    rng = random.Random(4)
    h = build("C4")
    for _ in range(300):
        n = rng.randint(4, 7)
        g = SimpleGraph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < 0.5])
        owner = [rng.randrange(-1, 4) for _ in range(n)]
        sets = tuple(frozenset(v for v in range(n) if owner[v] == x) for x in range(4))
        ok = all(sets) and all(g.induced(sorted(s)).is_connected() for s in sets) and all(
            any(g.has_edge(a, b) for a in sets[x] for b in sets[y]) for x, y in h.edges()
        )
        assert verify_model(g, h, MinorModel(sets)) == ok


@pytest.mark.parametrize("target", ["K4", "K3,3", "Prism", "Cube"])
def test_topological_equals_minor_for_subcubic_targets(target):
    h = build(target)
    for g in census(7) + [build("V8"), build("Petersen"), build("L(K3,3)")]:
        if g.n < h.n or g.m < h.m:
            continue
        sub = find_topological_minor(g, h)
        assert (sub is not None) == has_minor(g, h)
        if sub is not None:
            assert verify_subdivision(g, h, sub)
            assert verify_model(g, h, sub.as_minor_model(h.n))


def test_planarity_matches_wagner_oracle(small_census):
    for g in small_census:
        fast, wit = is_planar(g, witness=True)
        assert fast == is_planar(g, method="minor")
        assert (wit is None) == fast
    assert sum(is_planar(g) for g in small_census) == 1015


def test_planarity_named():
    assert is_planar(build("Oct1+")) and is_planar(build("Cube")) and is_planar(build("L5"))
    for name in ("Oct2+", "K5", "K3,3", "V8", "Petersen", "Oct+"):
        planar, wit = is_planar(build(name), witness=True)
        assert not planar and wit.name in ("K5", "K3,3")


def test_budget_exhaustion():
    with pytest.raises(SearchBudgetExceeded):
        find_minor(build("L(V8)"), build("K6"), budget=3)


def test_minor_reflexive_and_size_bounds():
    g = build("Petersen")
    assert find_minor(g, g) is not None
    assert find_minor(build("K4"), build("K5")) is None
