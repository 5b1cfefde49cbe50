"""Regularity of powers of edge ideals: graph classes, generator orders,
even connections and exact Betti numbers of monomial ideals."""
from __future__ import annotations

from .betti import BettiTable, betti_table, hochster_betti, koszul_betti, regularity, taylor_betti
from .classes import (complement_chordal, is_claw_free, is_cricket_free, is_gap_free,
                      is_n_claw_free)
from .errors import ResourceLimitError
from .evenconn import (ColonGraph, EdgeProduct, EvenConnectionWitness, colon_graph,
                       even_connected_pairs, find_even_connection)
from .graph import Graph, build_graph, complement, induced_subgraph, star
from .graphio import named_graph, parse_edge_list, small_graph_catalog
from .monomials import (Monomial, MonomialIdeal, VariableContext, colon, edge_ideal,
                        parse_ideal, polarize, power)
from .ordering import EdgeOrder, maximal_expression, ordered_generators, verify_ordering_property

__version__ = "0.1.0"

__all__ = [
    "BettiTable", "ColonGraph", "EdgeOrder", "EdgeProduct", "EvenConnectionWitness", "Graph",
    "Monomial", "MonomialIdeal", "ResourceLimitError", "VariableContext", "betti_table",
    "build_graph", "colon", "colon_graph", "complement", "complement_chordal", "edge_ideal",
    "even_connected_pairs", "find_even_connection", "hochster_betti", "induced_subgraph",
    "is_claw_free", "is_cricket_free", "is_gap_free", "is_n_claw_free", "koszul_betti",
    "maximal_expression", "named_graph", "ordered_generators", "parse_edge_list", "parse_ideal",
    "polarize", "power", "regularity", "small_graph_catalog", "star", "taylor_betti",
    "verify_ordering_property",
]
