from __future__ import annotations

import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from edgereg import classes
from edgereg.graph import Graph, build_graph, complement
from edgereg.graphio import named_graph

from conftest import graphs
from test_graph import to_nx

CRICKET = nx.Graph([(1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])


# brute-force oracles ----------------------------------------------------

def has_gap(G: Graph) -> bool:
    for (a, b), (c, d) in itertools.combinations(G.edges(), 2):
        if len({a, b, c, d}) == 4 and not any(G.has_edge(p, q) for p in (a, b) for q in (c, d)):
            return True
    return False


def has_induced(G: Graph, pattern: nx.Graph) -> bool:
    H = to_nx(G)
    k = pattern.number_of_nodes()
    return any(nx.is_isomorphic(H.subgraph(S), pattern)
               for S in itertools.combinations(G.vertices, k))


# fixed cases ------------------------------------------------------------

def test_gap_free_examples(xw_graph):
    r = classes.is_gap_free(build_graph([("a", "b"), ("c", "d")]))
    assert not r.holds and set(r.witness) == set("abcd")
    assert classes.is_gap_free(named_graph("K5")).holds
    assert classes.is_gap_free(xw_graph).holds == (not has_gap(xw_graph))


def test_claw_examples(xy_graph):
    r = classes.is_n_claw_free(named_graph("K1,3"), 3)
    assert not r.holds and r.witness[0] == "a" and set(r.witness) == set("abcd")
    assert classes.is_n_claw_free(named_graph("triangle"), 3).holds
    r = classes.is_n_claw_free(xy_graph, 3)
    assert not r.holds and r.witness[0] == "x"
    with pytest.raises(ValueError):
        classes.is_n_claw_free(xy_graph, 1)


def test_cricket_examples():
    assert not classes.is_cricket_free(named_graph("cricket")).holds
    assert classes.is_cricket_free(named_graph("C5")).holds


def test_complement_chordal_examples():
    assert classes.complement_chordal(named_graph("K4")).holds
    assert not classes.complement_chordal(build_graph([("a", "b"), ("c", "d")])).holds
    assert not classes.complement_chordal(named_graph("C5")).holds


def test_max_degree_distance_examples():
    assert classes.check_max_degree_distance(named_graph("K1,4")).holds
    r = classes.check_max_degree_distance(named_graph("P5"))
    assert not r.precondition_ok


# properties against oracles ---------------------------------------------

@given(graphs())
def test_gap_free_two_routes(G):
    r = classes.is_gap_free(G)
    assert r.holds == (not has_gap(G))
    assert r.holds == (not classes.complement_has_induced_c4(G))
    if not r.holds:
        assert classes.witness_is_valid(G, r)


@settings(max_examples=40)
@given(graphs(max_n=7))
def test_claw_and_cricket_against_isomorphism_oracle(G):
    for n in (2, 3, 4):
        r = classes.is_n_claw_free(G, n)
        assert r.holds == (not has_induced(G, nx.star_graph(n)))
        if not r.holds:
            assert classes.witness_is_valid(G, r, n)
    r = classes.is_cricket_free(G)
    assert r.holds == (not has_induced(G, CRICKET))
    if not r.holds:
        assert classes.witness_is_valid(G, r)


@given(graphs())
def test_claw_free_implies_cricket_free(G):
    if classes.is_claw_free(G).holds:
        assert classes.is_cricket_free(G).holds


@given(graphs())
def test_complement_chordal_against_networkx(G):
    r = classes.complement_chordal(G)
    assert r.holds == nx.is_chordal(to_nx(complement(G)))
    if not r.holds:
        assert classes.witness_is_valid(G, r)


@given(graphs(max_n=8))
def test_max_degree_distance_on_gap_free(G):
    r = classes.check_max_degree_distance(G)
    assert r.precondition_ok == classes.is_gap_free(G).holds
    if r.precondition_ok:
        assert r.holds
