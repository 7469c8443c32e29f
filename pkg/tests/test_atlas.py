from __future__ import annotations

import pytest

from octminor.atlas import (
    NAMES,
    Catalog,
    build,
    census,
    check_named,
    gen_all_graphs,
    gen_cubic_cyc4,
    gen_special_3sum_K4,
    is_special_3sum_K4,
    replay,
)
from octminor.canon import canonical_key, is_isomorphic
from octminor.connectivity import DomainError, is_cubic, is_cyclically_4_connected_cubic, is_k_connected
from octminor.minors import is_planar

SHAPES = {
    "K5": (5, 10),
    "K3,3": (6, 9),
    "C7^2": (7, 14),
    "W5": (6, 10),
    "Prism": (6, 9),
    "Cube": (8, 12),
    "Oct": (6, 12),
    "Oct\\e": (6, 11),
    "Oct+": (6, 13),
    "Oct1+": (7, 13),
    "Oct2+": (7, 13),
    "V8": (8, 12),
    "P10": (10, 15),
    "L5": (10, 15),
    "L(K3,3)": (9, 18),
    "L(Cube)": (12, 24),
    "L(V8)": (12, 24),
    "K5^": (8, 16),
}


@pytest.mark.parametrize("name, shape", sorted(SHAPES.items()))
def test_shapes(name, shape):
    g = build(name)
    assert (g.n, g.m) == shape


@pytest.mark.parametrize("name", [n for n in NAMES if "<" not in n])
def test_named_graphs_validate(name):
    assert check_named(name) == []


def test_aliases_and_unicode():
    assert build("oct₁⁺") == build("Oct1+")
    assert build("Petersen") == build("P10")
    assert build("C₆²") == build("C6^2")
    with pytest.raises(DomainError):
        build("Nonsense")


def test_octahedron_splits_differ_in_planarity():
    assert is_planar(build("Oct1+")) and not is_planar(build("Oct2+"))
    assert is_k_connected(build("Oct1+"), 3) and is_k_connected(build("Oct2+"), 3)
    assert not is_isomorphic(build("Oct1+"), build("Oct2+"))


def test_ladder_base_graphs():
    assert is_isomorphic(build("L4'"), build("V8"))
    assert is_planar(build("L5"))
    for name in ("L4'", "L5'", "L5''", "P10"):
        assert not is_planar(build(name))
    assert not is_isomorphic(build("L5''"), build("L5'"))


def test_census_counts():
    assert [len(gen_all_graphs(n)) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]


def test_census_prefilters_agree():
    full = [g for g in census(7) if g.m == 11 and g.min_degree() >= 3]
    fast = census(7, min_degree=3, num_edges=11)
    assert {canonical_key(g) for g in full} == {canonical_key(g) for g in fast}


def test_census_size_guard():
    with pytest.raises(DomainError):
        gen_all_graphs(9)


def test_cubic_closure_members_are_cyclically_4_connected():
    cat = gen_cubic_cyc4(2)
    assert len(gen_cubic_cyc4(0)) == 2
    for entry in cat:
        assert is_cubic(entry.graph) and is_cyclically_4_connected_cubic(entry.graph)
        assert canonical_key(replay(entry.provenance)) == entry.key
    assert any(is_isomorphic(e.graph, build("V8")) for e in cat)
    assert any(is_isomorphic(e.graph, build("Petersen")) for e in cat)


def test_cubic_closure_truncation_flag():
    cat = gen_cubic_cyc4(3, max_vertices=8)
    assert cat.truncated
    assert all(e.graph.n <= 8 for e in cat)


def test_k4_closure_members():
    cat = gen_special_3sum_K4(8)
    assert [sum(1 for e in cat if e.graph.n == n) for n in range(4, 9)] == [1, 1, 1, 3, 7]
    for entry in cat:
        g = entry.graph
        assert is_planar(g) and is_k_connected(g, 3) and g.m == 3 * g.n - 6
        assert canonical_key(replay(entry.provenance)) == entry.key


def test_k4_closure_with_deletions_is_larger():
    assert len(gen_special_3sum_K4(7, allow_deletions=True)) > len(gen_special_3sum_K4(7))
    for entry in gen_special_3sum_K4(6, allow_deletions=True):
        assert canonical_key(replay(entry.provenance)) == entry.key


def test_catalog_save_load(tmp_path):
    cat = gen_special_3sum_K4(7)
    path = tmp_path / "k.g6"
    cat.save(path)
    again = Catalog.load(path)
    assert again.keys() == cat.keys()
    assert [e.provenance for e in again] == [e.provenance for e in cat]
    assert path.read_text() == (tmp_path / "k.g6").read_text()


@pytest.mark.parametrize("deletions, bound", [(False, 10), (True, 8)])
def test_k4_recogniser_matches_catalog(deletions, bound):
    cat = gen_special_3sum_K4(bound, allow_deletions=deletions)
    assert all(is_special_3sum_K4(g, deletions) for g in cat.graphs())
    outside = [g for g in census(7) if is_special_3sum_K4(g, deletions) and g not in cat]
    assert outside == []
    assert not is_special_3sum_K4(build("L5"), deletions)
