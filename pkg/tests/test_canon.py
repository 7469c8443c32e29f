from __future__ import annotations

import random
from itertools import combinations, permutations

from octminor.atlas import build
from octminor.canon import canonical_form, canonical_key, canonical_order, is_isomorphic
from octminor.graph import SimpleGraph


def brute_certificate(g: SimpleGraph) -> tuple:
    """Smallest relabelled edge set over all n! orderings (oracle)."""
    return min(tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in g.edges())) for p in permutations(range(g.n)))


def all_labelled(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield SimpleGraph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def random_graph(rng, n, p=0.5):
    return SimpleGraph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def test_class_counts_match_brute_force():
    for n, expected in ((3, 4), (4, 11), (5, 34)):
        keys = {canonical_key(g) for g in all_labelled(n)}
        brute = {brute_certificate(g) for g in all_labelled(n)}
        assert len(keys) == len(brute) == expected


def test_six_vertex_classes():
    assert len({canonical_key(g) for g in all_labelled(6)}) == 156


def test_key_agrees_with_brute_force_partition():
    rng = random.Random(7)
    sample = [random_graph(rng, 6, rng.uniform(0.2, 0.8)) for _ in range(120)]
    by_key = {}
    by_brute = {}
    for i, g in enumerate(sample):
        by_key.setdefault(canonical_key(g), set()).add(i)
        by_brute.setdefault(brute_certificate(g), set()).add(i)
    assert sorted(map(sorted, by_key.values())) == sorted(map(sorted, by_brute.values()))


def test_invariance_under_relabelling():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(1, 14)
        g = random_graph(rng, n, rng.uniform(0.1, 0.9))
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_key(g.relabel(perm)) == canonical_key(g)


def test_regular_graphs_are_distinguished():
    # same degree sequence, non-isomorphic
    assert not is_isomorphic(build("Prism"), build("K3,3"))
    assert not is_isomorphic(build("Cube"), build("V8"))
    assert not is_isomorphic(build("L5''"), build("L5'"))
    assert is_isomorphic(build("C5^2"), build("K5"))


def test_canonical_form_and_order():
    rng = random.Random(3)
    for _ in range(30):
        g = random_graph(rng, rng.randint(2, 10))
        form = canonical_form(g)
        assert canonical_key(form) == canonical_key(g)
        order = canonical_order(g)
        assert sorted(order) == list(range(g.n))
        assert g.relabel([order.index(v) for v in range(g.n)]) == form
        assert canonical_key(g).graph() == form


def test_key_round_trips_through_graph6():
    g = build("Petersen")
    key = canonical_key(g)
    assert canonical_key(key.graph()) == key
    assert str(key) == key.graph6()
