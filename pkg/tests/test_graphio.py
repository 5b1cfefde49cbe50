from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given

from edgereg.graph import are_isomorphic, build_graph
from edgereg.graphio import (GraphFormatError, format_edge_list, named_graph, parse_edge_list,
                             parse_edge_list_text, parse_graph6, small_graph_catalog, to_graph6)

from conftest import graphs


def test_single_edge_file(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("a b\n")
    G = parse_edge_list(p)
    assert G.vertices == ("a", "b") and G.num_edges == 1


def test_listing_order_kept(xw_graph):
    text = "z w\ny w\nx w\nx y\nt x\ns w\n"
    G = parse_edge_list_text(text)
    assert G == xw_graph
    assert G.vertices == ("z", "w", "y", "x", "t", "s")


def test_self_loop_reports_line():
    with pytest.raises(GraphFormatError) as info:
        parse_edge_list_text("a a\n")
    assert info.value.line == 1


def test_malformed_line_number():
    with pytest.raises(GraphFormatError) as info:
        parse_edge_list_text("# header\na b\nb c d\n")
    assert info.value.line == 3


def test_comments_blank_lines_and_isolated():
    G = parse_edge_list_text("# c\n\na b\nq\n")
    assert G.isolated() == ("q",)


def test_cap_rejected():
    with pytest.raises(GraphFormatError):
        parse_edge_list_text("a b\nc d\n", max_vertices=3)


@given(graphs())
def test_edge_list_round_trip(G):
    assert parse_edge_list_text(format_edge_list(G)) == G


@given(graphs())
def test_graph6_matches_networkx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edge_indices())
    want = nx.to_graph6_bytes(H, nodes=list(range(G.n)), header=False).decode().strip()
    assert to_graph6(G) == want
    assert parse_graph6(want, list(G.vertices)) == G


def test_graph6_header_and_errors():
    assert parse_graph6(">>graph6<<Bg").num_edges == 2
    with pytest.raises(GraphFormatError):
        parse_graph6("")
    with pytest.raises(GraphFormatError):
        parse_graph6("E")


def test_catalog_counts_match_known_sequence():
    # number of graphs on n unlabelled vertices: 1, 2, 4, 11, 34, 156
    counts = [sum(1 for G in small_graph_catalog(6) if G.n == n) for n in range(1, 7)]
    assert counts == [1, 2, 4, 11, 34, 156]


def test_catalog_is_isomorphism_free():
    five = [G for G in small_graph_catalog(5, 5)]
    for i, G in enumerate(five):
        for H in five[i + 1:]:
            if G.num_edges == H.num_edges:
                assert not are_isomorphic(G, H)


def test_named_graphs():
    assert named_graph("C5").num_edges == 5
    assert named_graph("K1,3").degree("a") == 3
    assert named_graph("P4").num_edges == 3
    assert named_graph("K4").num_edges == 6
    assert are_isomorphic(named_graph("triangle"), build_graph([("x", "y"), ("y", "z"), ("x", "z")]))
    assert named_graph("cricket").degree("c") == 4
    with pytest.raises(ValueError):
        named_graph("Q3")
