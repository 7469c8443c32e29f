from __future__ import annotations

import random
from itertools import combinations

import pytest

from octminor.atlas import build, census, cycle_square
from octminor.connectivity import (
    DomainError,
    cyclic_edge_cut,
    is_cyclically_4_connected_cubic,
    is_k_connected,
    is_separating_triangle,
    non_separating_triangles,
    vertex_connectivity,
)
from octminor.graph import SimpleGraph, delete_vertices
from octminor.transforms import apply_split, split_specs


def brute_connectivity(g: SimpleGraph) -> int:
    """Smallest vertex set whose removal disconnects g (n - 1 for complete graphs)."""
    for k in range(g.n - 1):
        for cut in combinations(range(g.n), k):
            if not delete_vertices(g, cut).is_connected():
                return k
    return g.n - 1


def random_graph(rng, n, p):
    return SimpleGraph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def test_connectivity_matches_brute_force():
    rng = random.Random(5)
    for _ in range(250):
        g = random_graph(rng, rng.randint(2, 8), rng.uniform(0.2, 0.95))
        kappa, cut = vertex_connectivity(g, witness=True)
        assert kappa == brute_connectivity(g)
        if cut is not None:
            assert len(cut.elements) == kappa
            assert not delete_vertices(g, cut.elements).is_connected()
        for k in range(0, 6):
            assert is_k_connected(g, k) == (g.n > k and kappa >= k)


def test_named_connectivities():
    assert vertex_connectivity(build("K5")) == 4
    assert vertex_connectivity(build("Oct")) == 4
    assert vertex_connectivity(build("Oct1+")) == 3
    assert vertex_connectivity(build("L(K3,3)")) == 4
    assert vertex_connectivity(SimpleGraph.from_edges(4, [(0, 1), (2, 3)])) == 0


def test_four_connected_census_counts():
    counts = [len([g for g in census(7, min_degree=4) if g.n == n and is_k_connected(g, 4)]) for n in (5, 6, 7)]
    assert counts == [1, 4, 25]


@pytest.mark.parametrize(
    "name, expected",
    [("K3,3", True), ("Cube", True), ("V8", True), ("Petersen", True), ("Prism", False), ("K4", False)],
)
def test_cyclic_4_connectivity(name, expected):
    g = build(name)
    ok, cut = is_cyclically_4_connected_cubic(g, witness=True)
    assert ok == expected
    if name == "Prism":
        assert cut is not None and len(cut.elements) == 3


def test_cyclic_cut_sides_contain_cycles():
    g = build("Prism")
    cut = cyclic_edge_cut(g)
    for side in cut.sides:
        sub = g.induced(sorted(side))
        assert sub.m >= sub.n  # a connected side with a cycle


def test_cyclic_requires_cubic():
    with pytest.raises(DomainError):
        is_cyclically_4_connected_cubic(build("K5"))


def test_separating_triangles():
    # two K4s glued on a triangle: the shared triangle separates
    g = SimpleGraph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4)])
    assert is_separating_triangle(g, (0, 1, 2))
    assert not is_separating_triangle(g, (0, 1, 3))
    assert (0, 1, 2) not in non_separating_triangles(g)
    assert not is_separating_triangle(build("K4"), (0, 1, 2))
    with pytest.raises(DomainError):
        is_separating_triangle(build("C5"), (0, 1, 2))


def test_four_splits_preserve_four_connectivity():
    rng = random.Random(9)
    pool = [cycle_square(5), cycle_square(6), cycle_square(7), build("L(K3,3)")]
    for _ in range(60):
        g = rng.choice(pool)
        v = rng.randrange(g.n)
        h = apply_split(g, rng.choice(split_specs(g, v, 4)), verify=False)
        assert brute_connectivity(h) >= 4 if h.n <= 8 else is_k_connected(h, 4)


def test_three_splits_preserve_three_connectivity():
    rng = random.Random(10)
    pool = [g for g in census(7, min_degree=3) if is_k_connected(g, 3) and g.max_degree() >= 4]
    for _ in range(60):
        g = rng.choice(pool)
        v = rng.choice([x for x in range(g.n) if g.degree(x) >= 4])
        h = apply_split(g, rng.choice(split_specs(g, v, 3)))
        assert brute_connectivity(h) >= 3
