from __future__ import annotations

import io
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from octminor.graph import SimpleGraph
from octminor.io import (
    FormatError,
    decode_edge_list,
    decode_graph6,
    encode_dot,
    encode_edge_list,
    encode_graph6,
    format_graph,
    load_graph,
    parse_graph,
    read_graph6_stream,
    write_graph6_stream,
)


@st.composite
def graphs(draw, max_n=64):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    if not pairs:
        return SimpleGraph.empty(n)
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimpleGraph.from_edges(n, [p for p, b in zip(pairs, bits) if b])


def test_known_encodings():
    k4 = SimpleGraph.from_edges(4, combinations(range(4), 2))
    assert encode_graph6(k4) == "C~"
    assert encode_graph6(SimpleGraph.empty(0)) == "?"
    assert encode_graph6(SimpleGraph.from_edges(2, [(0, 1)])) == "A_"
    # path 0-1-2 in column order: bits (0,1)=1 (0,2)=0 (1,2)=1
    assert encode_graph6(SimpleGraph.from_edges(3, [(0, 1), (1, 2)])) == "Bg"


def test_small_exhaustive_round_trip():
    for n in range(6):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = SimpleGraph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            assert decode_graph6(encode_graph6(g)) == g


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_graph6_round_trip(g):
    text = encode_graph6(g)
    assert text.isascii() and all(63 <= ord(c) <= 126 for c in text)
    assert decode_graph6(text) == g


def test_long_order_prefix():
    g = SimpleGraph.from_edges(63, [(0, 62)])
    text = encode_graph6(g)
    assert text.startswith("~")
    assert decode_graph6(text) == g


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=12))
def test_edge_list_round_trip(g):
    assert decode_edge_list(encode_edge_list(g)) == g


def test_header_and_stream():
    g = SimpleGraph.from_edges(3, [(0, 1)])
    buf = io.StringIO()
    write_graph6_stream([g, g], buf)
    assert read_graph6_stream(buf.getvalue().splitlines()) == [g, g]
    assert decode_graph6(">>graph6<<" + encode_graph6(g)) == g


@pytest.mark.parametrize("bad", ["", "B", "C~~", "\x7f", "C!"])
def test_malformed_graph6(bad):
    with pytest.raises(FormatError):
        parse_graph(bad)


def test_malformed_edge_list():
    with pytest.raises(FormatError):
        decode_edge_list("3 2\n0 1\n")
    with pytest.raises(FormatError):
        decode_edge_list("3 1\n0 5\n")


def test_parse_detects_format(tmp_path):
    g = SimpleGraph.from_edges(4, [(0, 1), (2, 3)])
    assert parse_graph(encode_edge_list(g)) == g
    assert parse_graph(encode_graph6(g) + "\n") == g
    p = tmp_path / "g.txt"
    p.write_text(encode_edge_list(g))
    assert load_graph(p) == g


def test_dot_and_format():
    g = SimpleGraph.from_edges(2, [(0, 1)])
    assert "0 -- 1;" in encode_dot(g)
    assert format_graph(g, "graph6") == "A_\n"
    assert format_graph(g, "edges").startswith("2 1")
