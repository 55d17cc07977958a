from __future__ import annotations

import pytest
from hypothesis import given

from mintough.errors import ParseError
from mintough.formats import (
    emit_edge_list, emit_graph6, graph6_from_edge_mask, parse_edge_list, parse_graph6, read_graph, to_dot,
)
from mintough import kernels
from named import NET, complete, graphs, path


def test_edge_list_path():
    G = parse_edge_list("0 1\n1 2")
    assert G.n == 3 and G.edges() == [(0, 1), (1, 2)]


def test_edge_list_declared_count_keeps_isolated_vertices():
    G = parse_edge_list("n 4\n0 1")
    assert G.n == 4 and G.m == 1 and not G.is_connected()


def test_edge_list_comments_and_blank_lines():
    G = parse_edge_list("# net\n\n0 1  # pendant\n1 2\n")
    assert G.edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize("text, line", [
    ("0 0", 1),
    ("0 1\n1 x", 2),
    ("0 1 2", 1),
    ("n 2\n0 5", 2),
    ("0 1\nn 3", 2),
])
def test_edge_list_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_graph6_known_strings():
    assert parse_graph6("A_") == complete(2)
    assert parse_graph6("Bw") == complete(3)
    assert parse_graph6(">>graph6<<Bw") == complete(3)
    assert emit_graph6(parse_graph6("D?{")) == "D?{"


@pytest.mark.parametrize("bad", ["", "B", "Bww", "B\x7f", "A~"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(ParseError):
        parse_graph6(bad)


@given(graphs(0 + 1, 12))
def test_graph6_round_trip(G):
    assert parse_graph6(emit_graph6(G)) == G


@given(graphs(1, 10))
def test_edge_list_round_trip(G):
    assert parse_edge_list(emit_edge_list(G)) == G


@given(graphs(1, 9))
def test_edge_mask_graph6_agree(G):
    emask = kernels.pure.edge_mask_from_adjacency(list(G.masks), G.n)
    assert graph6_from_edge_mask(G.n, emask) == emit_graph6(G)


def test_large_n_header_round_trip():
    G = path(70)
    s = emit_graph6(G)
    assert s.startswith("~")
    assert parse_graph6(s) == G


def test_read_graph_dispatch():
    assert read_graph("\n\nBw\n", "graph6") == complete(3)
    assert read_graph(emit_edge_list(NET), "edges") == NET
    with pytest.raises(ParseError):
        read_graph("  \n", "graph6")


def test_dot_lists_vertices_and_edges():
    dot = to_dot(path(3))
    assert dot.startswith("graph G {")
    assert "  0 -- 1;" in dot and "  1 -- 2;" in dot
