from __future__ import annotations

import itertools
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgereg.classes import is_gap_free
from edgereg.evenconn import (EdgeProduct, algebraic_colon, all_edge_products, colon_graph,
                              connection_lengths, even_connected_pairs, find_even_connection,
                              iter_witnesses, neighbour_connection_violations,
                              polarized_colon_matches, shared_factor_vertex_holds,
                              verify_colon_characterization, verify_representation_independence,
                              witness_is_valid)
from edgereg.graph import build_graph, complement, induced_cycles_brute_force
from edgereg.graphio import named_graph
from edgereg.monomials import Monomial, edge_ideal, ideal_sum, parse_ideal, parse_monomial
from edgereg.ordering import in_edge_power

from conftest import graphs_with_edges

XW_COLON_EDGES = {("s", "t"), ("s", "w"), ("s", "y"), ("t", "x"), ("t", "y"), ("t", "z"), ("w", "x"),
                  ("w", "y"), ("w", "z"), ("x", "y"), ("y", "z"), ("y", "y'")}


def pair(*labels):
    return frozenset(labels)


def oracle_pairs(G, ee):
    """Walk enumeration straight from the definition, on labels."""
    V = G.vertices
    budget = Counter(frozenset((V[a], V[b])) for a, b in ee.factors)
    found = set()

    def rec(x, left, steps):
        # x sits at an odd position of the walk
        for e, c in left.items():
            if c == 0 or x not in e:
                continue
            (y,) = e - {x} if len(e) == 2 else (x,)
            rest = left.copy()
            rest[e] -= 1
            for z in G.neighbors(y):
                found.add(frozenset((start, z)))
                rec(z, rest, steps + 1)

    for start in V:
        for p1 in G.neighbors(start):
            rec(p1, budget, 0)
    return found


@st.composite
def graph_products(draw, max_n=6, max_s=2):
    G = draw(graphs_with_edges(max_n=max_n))
    edges = G.edge_indices()
    s = draw(st.integers(1, max_s))
    return G, EdgeProduct(G, tuple(draw(st.sampled_from(edges)) for _ in range(s)))


# worked examples -------------------------------------------------------

def test_longest_uv_witness(uv_graph):
    G = uv_graph
    ee = EdgeProduct.parse(G, "xy,wz")
    w = find_even_connection(G, ee, "u", "v", longest=True)
    assert w.format(G) == "u: u x y w z v [1 2]"
    assert witness_is_valid(G, ee, w)
    short = find_even_connection(G, ee, "u", "v")
    assert short.k == 1 and witness_is_valid(G, ee, short)


def test_pairs_for_xy(xy_graph):
    G = xy_graph
    ee = EdgeProduct.parse(G, "xy")
    new = {p for p in even_connected_pairs(G, ee) if not (len(p) == 2 and G.has_edge(*p))}
    assert new == {pair("z"), pair("u", "z"), pair("v", "z"), pair("w", "z"), pair("u", "w"), pair("v", "w")}
    w = find_even_connection(G, ee, "z", "z")
    assert witness_is_valid(G, ee, w) and w.k == 1
    walks = {tuple(G.vertices[i] for i in w.walk) for w in iter_witnesses(G, ee, G.index("z"), G.index("z"))}
    assert ("z", "y", "x", "z") in walks
    I = edge_ideal(G)
    want = ideal_sum(I, parse_ideal("z^2, u*z, v*z, w*z, u*w, v*w", I.context))
    assert algebraic_colon(G, ee) == want
    assert verify_colon_characterization(G, ee).passed
    cg = colon_graph(G, ee)
    assert cg.whiskers == {"z": "z'"}
    assert sorted(cg.new_edges()) == [("u", "w"), ("u", "z"), ("v", "w"), ("v", "z"), ("w", "z"), ("z", "z'")]


def test_colon_graph_for_xw(xw_graph):
    G = xw_graph
    ee = EdgeProduct.parse(G, "xw")
    new = {p for p in even_connected_pairs(G, ee) if not (len(p) == 2 and G.has_edge(*p))}
    assert new == {pair("y", "z"), pair("t", "z"), pair("t", "y"), pair("t", "s"), pair("y", "s"), pair("y")}
    cg = colon_graph(G, ee)
    assert {tuple(sorted(e)) for e in cg.edge_list()} == XW_COLON_EDGES
    assert cg.whiskers == {"y": "y'"}
    assert cg.base.degree("y'") == 1
    assert polarized_colon_matches(G, ee, cg)
    assert verify_colon_characterization(G, ee).passed


def test_single_edge_has_no_new_pairs():
    G = build_graph([("a", "b")])
    ee = EdgeProduct.parse(G, "ab")
    assert even_connected_pairs(G, ee) <= {pair("a", "b")}
    assert colon_graph(G, ee).base == G


def test_plain_edge_is_not_a_witness():
    G = build_graph([("a", "b"), ("c", "d")])
    ee = EdgeProduct.parse(G, "cd")
    assert find_even_connection(G, ee, "a", "b") is None


def test_edge_product_parsing(xw_graph):
    G = xw_graph
    assert EdgeProduct.parse(G, "x-w").factors == EdgeProduct.parse(G, "xw").factors
    assert EdgeProduct.parse(G, "x w; z w").s == 2
    with pytest.raises(ValueError):
        EdgeProduct.parse(G, "xz")


def test_representation_independence_examples(uv_graph):
    C4 = named_graph("C4")
    rep = verify_representation_independence(C4, parse_monomial("a*b*c*d", edge_ideal(C4).context))
    assert rep.factorizations == 2 and rep.passed
    tri = build_graph([("x", "y"), ("y", "z"), ("x", "z")])
    rep = verify_representation_independence(tri, parse_monomial("x*y^2*z", edge_ideal(tri).context))
    assert rep.factorizations == 1 and rep.passed
    rep = verify_representation_independence(uv_graph, parse_monomial("x*y*w*z", edge_ideal(uv_graph).context))
    assert rep.factorizations == 1
    with pytest.raises(ValueError):
        verify_representation_independence(tri, parse_monomial("x*y*z", edge_ideal(tri).context))


def test_walks_and_simple_paths_differ():
    # a is connected to itself only along a d c b d a, which revisits d
    G = build_graph([("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")])
    ee = EdgeProduct.parse(G, "bd,cd")
    walks = even_connected_pairs(G, ee)
    paths = even_connected_pairs(G, ee, simple=True)
    assert pair("a") in walks and pair("a") not in paths
    w = find_even_connection(G, ee, "a", "a")
    assert [G.vertices[i] for i in w.walk] in (list("adcbda"), list("adbcda"))
    assert verify_colon_characterization(G, ee).passed


# properties ---------------------------------------------------------------

@given(graph_products())
def test_pairs_match_definition_oracle(data):
    G, ee = data
    assert even_connected_pairs(G, ee) == oracle_pairs(G, ee)


@given(graph_products())
def test_colon_characterization(data):
    G, ee = data
    rep = verify_colon_characterization(G, ee)
    assert rep.passed, (rep.missing, rep.extra, rep.non_quadratic)


@given(graph_products(max_s=3, max_n=5))
def test_witnesses_are_sound(data):
    G, ee = data
    I = edge_ideal(G)
    for u, v in itertools.combinations_with_replacement(G.vertices, 2):
        w = find_even_connection(G, ee, u, v)
        if w is None:
            continue
        assert witness_is_valid(G, ee, w)
        uv = Monomial.from_support((G.index(u), G.index(v)), G.n)
        assert in_edge_power(uv * ee.product, I, ee.s + 1)


@settings(max_examples=30)
@given(graph_products(max_n=5))
def test_dfs_enumeration_agrees_with_search(data):
    G, ee = data
    seen = {}
    for u in range(G.n):
        for w in iter_witnesses(G, ee, u):
            assert witness_is_valid(G, ee, w)
            key = pair(G.vertices[u], G.vertices[w.walk[-1]])
            seen[key] = max(seen.get(key, 0), w.k)
    assert seen == connection_lengths(G, ee)


@given(graph_products())
def test_neighbour_propagation(data):
    G, ee = data
    pairs = even_connected_pairs(G, ee)
    for u, v in itertools.combinations_with_replacement(G.vertices, 2):
        w = find_even_connection(G, ee, u, v, longest=True)
        if w is not None:
            assert neighbour_connection_violations(G, ee, w, pairs) == []


@settings(max_examples=30)
@given(graph_products(max_n=5))
def test_shared_factor_vertex(data):
    G, ee = data
    pairs = even_connected_pairs(G, ee)
    wits = [w for u in range(G.n) for w in itertools.islice(iter_witnesses(G, ee, u), 6)]
    for w1, w2 in itertools.product(wits[:15], repeat=2):
        assert shared_factor_vertex_holds(G, w1, w2, pairs)


@given(graph_products())
def test_colon_graph_polarization(data):
    G, ee = data
    cg = colon_graph(G, ee)
    assert polarized_colon_matches(G, ee, cg)
    assert all(cg.base.degree(w) == 1 for w in cg.whiskers.values())
    for u, v in G.edges():
        assert cg.base.has_edge(u, v)


@given(graph_products())
def test_gap_free_structure(data):
    G, ee = data
    if not is_gap_free(G).holds:
        return
    H = colon_graph(G, ee).base
    assert is_gap_free(H).holds
    comp_H, comp_G = complement(H), complement(G)
    for cyc in induced_cycles_brute_force(comp_H, 5):
        assert all(v in G.vertices for v in cyc)
        assert all(comp_G.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


@settings(max_examples=30)
@given(graphs_with_edges(max_n=5), st.integers(1, 2))
def test_independent_of_presentation(G, s):
    I = edge_ideal(G)
    seen = set()
    for ee in all_edge_products(G, s):
        if ee.product in seen:
            continue
        seen.add(ee.product)
        assert verify_representation_independence(G, ee.product).passed
