from __future__ import annotations

import itertools
import string

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from edgereg.graph import Graph, build_graph
from edgereg.monomials import Monomial, VariableContext, minimalize

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    labels = string.ascii_lowercase[:n]
    pairs = list(itertools.combinations(labels, 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph([p for p, k in zip(pairs, keep) if k], labels)


@st.composite
def graphs_with_edges(draw, min_n: int = 2, max_n: int = 6) -> Graph:
    G = draw(graphs(min_n, max_n))
    if G.num_edges == 0:
        G = build_graph(G.edges() + [(G.vertices[0], G.vertices[1])], G.vertices)
    return G


@st.composite
def monomial_ideals(draw, max_vars: int = 5, max_gens: int = 8, max_exp: int = 3,
                    squarefree: bool = False):
    nv = draw(st.integers(2, max_vars))
    ctx = VariableContext(tuple(string.ascii_lowercase[:nv]))
    top = 1 if squarefree else max_exp
    exps = st.tuples(*[st.integers(0, top)] * nv).filter(any)
    gens = draw(st.lists(exps, min_size=1, max_size=max_gens))
    return minimalize([Monomial(e) for e in gens], ctx)


# small fixture graphs and ideals -------------------------------------

@pytest.fixture
def four_edge_ideal():
    from edgereg.monomials import parse_ideal
    return parse_ideal("a*b, b*c, a*d, b*d")


@pytest.fixture
def uv_graph():
    return build_graph([("x", "y"), ("x", "u"), ("y", "v"), ("y", "w"), ("w", "z"), ("z", "v")],
                       keep_order=True)


@pytest.fixture
def xy_graph():
    return build_graph([("x", "y"), ("x", "u"), ("x", "v"), ("x", "z"), ("y", "z"), ("y", "w")])


@pytest.fixture
def xw_graph():
    edges = [("z", "w"), ("y", "w"), ("x", "w"), ("x", "y"), ("t", "x"), ("s", "w")]
    return build_graph(edges, keep_order=True)
