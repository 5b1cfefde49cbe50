"""Colon by an edge product, computed two ways.

Builds the six-vertex graph with edges zw, yw, xw, xy, tx, sw, divides the
square of its edge ideal by xw, and compares the generic colon with the
graph read off from even-connected pairs.
"""
from __future__ import annotations

from edgereg.evenconn import (EdgeProduct, algebraic_colon, colon_graph, even_connected_pairs,
                              find_even_connection, verify_colon_characterization)
from edgereg.graph import build_graph


def main():
    G = build_graph([("z", "w"), ("y", "w"), ("x", "w"), ("x", "y"), ("t", "x"), ("s", "w")],
                    keep_order=True)
    ee = EdgeProduct.parse(G, "xw")
    print("graph edges:", " ".join(u + v for u, v in G.edges()))
    print("colon computed generically:", algebraic_colon(G, ee).format())

    print("\nnew pairs and one witness walk each:")
    for p in sorted(even_connected_pairs(G, ee), key=sorted):
        u, v = (sorted(p) * 2)[:2]
        if u != v and G.has_edge(u, v):
            continue
        print("  ", find_even_connection(G, ee, u, v).format(G))

    cg = colon_graph(G, ee)
    print("\ncolon graph edges:", " ".join(u + v for u, v in cg.edge_list()))
    print("whiskers for squared variables:", cg.whiskers)
    print("characterization holds:", verify_colon_characterization(G, ee).passed)


if __name__ == "__main__":
    main()
