"""Generator order of I^2 and a field-dependent regularity.

First part: the four-edge ideal (ab, bc, ad, bd) under the order
ab > bc > ad > bd, its ten degree-4 generators with their maximal
expressions, and the colon check between consecutive generators.

Second part: the Stanley-Reisner ideal of the six-vertex projective plane,
whose regularity is 4 over GF(2) but 3 in other characteristics.
"""
from __future__ import annotations

import itertools

from edgereg.betti import betti_table, regularity
from edgereg.monomials import Monomial, VariableContext, minimalize, parse_ideal
from edgereg.ordering import EdgeOrder, ordered_generators, verify_ordering_property


def rp2():
    facets = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
              (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)]
    faces = {frozenset(c) for f in facets for k in range(4) for c in itertools.combinations(f, k)}
    minimal_nonfaces = [S for k in range(1, 7) for S in map(frozenset, itertools.combinations(range(6), k))
                        if S not in faces and all(S - {v} in faces for v in S)]
    return minimalize([Monomial.from_support(S, 6) for S in minimal_nonfaces], VariableContext(tuple("abcdef")))


def main():
    I = parse_ideal("a*b, b*c, a*d, b*d")
    L = EdgeOrder.from_pairs(I, [("a", "b"), ("b", "c"), ("a", "d"), ("b", "d")])
    og = ordered_generators(I, L, 2)
    print(og.format_chain())
    rep = verify_ordering_property(I, L, 2)
    print("pairs checked:", len(rep.lines()), "counts:", rep.counts())
    print("Betti table of I over GF(2):")
    print(betti_table(I, 2).render())

    J = rp2()
    print("\nprojective plane ideal:", J.format())
    for p in (2, 3, 0):
        print(f"  char {p}: reg {regularity(J, p)}")
    print(betti_table(J, 2).render())


if __name__ == "__main__":
    main()
