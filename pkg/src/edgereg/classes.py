"""Detectors for the graph classes used by the regularity bounds.

Every detector scans candidates in lexicographic order of vertex indices and
returns the first forbidden configuration it meets.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .graph import (Graph, bfs_distances, complement, find_induced_cycle_at_least,
                    iter_bits)


@dataclass(frozen=True)
class ClassReport:
    class_name: str
    holds: bool
    witness: tuple[str, ...] | None = None

    def __bool__(self):
        return self.holds


def is_gap_free(G: Graph) -> ClassReport:
    """Witness ``(u, v, x, y)``: edges ``uv`` and ``xy`` with no edge between them."""
    edges = G.edge_indices()
    for a in range(len(edges)):
        u, v = edges[a]
        near = G.adj[u] | G.adj[v] | 1 << u | 1 << v
        for x, y in edges[a + 1:]:
            if not (near >> x & 1 or near >> y & 1):
                return ClassReport("gap_free", False, (G.vertices[u], G.vertices[v],
                                                       G.vertices[x], G.vertices[y]))
    return ClassReport("gap_free", True)


def complement_has_induced_c4(G: Graph) -> bool:
    """Independent check for gaps: look for an induced 4-cycle in the complement."""
    H = complement(G)
    for W in combinations(range(H.n), 4):
        mask = sum(1 << i for i in W)
        if all((H.adj[i] & mask).bit_count() == 2 for i in W):
            # 2-regular on 4 vertices is C4 (two disjoint edges are not 2-regular)
            return True
    return False


def is_n_claw_free(G: Graph, n: int) -> ClassReport:
    """Witness lists the root first, then the ``n`` pairwise non-adjacent leaves."""
    if n < 2:
        raise ValueError("n-claws need n >= 2")
    name = f"{n}_claw_free"
    for root in range(G.n):
        nbrs = list(iter_bits(G.adj[root]))
        if len(nbrs) < n:
            continue
        found = _independent_subset(G, nbrs, n, [])
        if found is not None:
            return ClassReport(name, False, tuple(G.vertices[i] for i in [root, *found]))
    return ClassReport(name, True)


def _independent_subset(G: Graph, pool: list[int], size: int, chosen: list[int]) -> list[int] | None:
    if len(chosen) == size:
        return chosen
    for pos, v in enumerate(pool):
        if len(chosen) + len(pool) - pos < size:
            break
        if any(G.adjacent(v, c) for c in chosen):
            continue
        found = _independent_subset(G, pool[pos + 1:], size, chosen + [v])
        if found is not None:
            return found
    return None


def is_claw_free(G: Graph) -> ClassReport:
    return is_n_claw_free(G, 3)


def is_cricket_free(G: Graph) -> ClassReport:
    """Witness ``(w1, ..., w5)`` with edges exactly w1w3, w2w3, w3w4, w3w5, w4w5."""
    for w3 in range(G.n):
        nbrs = list(iter_bits(G.adj[w3]))
        if len(nbrs) < 4:
            continue
        for w4, w5 in combinations(nbrs, 2):
            if not G.adjacent(w4, w5):
                continue
            blocked = G.adj[w4] | G.adj[w5]
            leaves = [w for w in nbrs if w not in (w4, w5) and not blocked >> w & 1]
            for w1, w2 in combinations(leaves, 2):
                if not G.adjacent(w1, w2):
                    return ClassReport("cricket_free", False,
                                       tuple(G.vertices[i] for i in (w1, w2, w3, w4, w5)))
    return ClassReport("cricket_free", True)


def complement_chordal(G: Graph) -> ClassReport:
    """Holds iff the complement has no induced cycle of length >= 4."""
    cyc = find_induced_cycle_at_least(complement(G), 4)
    return ClassReport("complement_chordal", cyc is None, None if cyc is None else cyc.vertices)


CRICKET_EDGES = frozenset({frozenset(p) for p in [(0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]})


def witness_is_valid(G: Graph, report: ClassReport, n: int | None = None) -> bool:
    """Re-check that a failure witness really induces the forbidden configuration."""
    if report.holds:
        return report.witness is None
    idx = [G.index(v) for v in report.witness]
    if len(set(idx)) != len(idx):
        return False
    induced = {frozenset((a, b)) for a, b in combinations(range(len(idx)), 2)
               if G.adjacent(idx[a], idx[b])}
    name = report.class_name
    if name == "gap_free":
        return induced == {frozenset((0, 1)), frozenset((2, 3))}
    if name == "cricket_free":
        return induced == CRICKET_EDGES
    if name.endswith("_claw_free"):
        return induced == {frozenset((0, k)) for k in range(1, len(idx))}
    if name == "complement_chordal":
        k = len(idx)
        cycle = {frozenset((a, (a + 1) % k)) for a in range(k)}
        non_edges = {frozenset(p) for p in combinations(range(k), 2)} - induced
        return k >= 4 and non_edges == cycle
    raise ValueError(f"unknown class {name!r}")


@dataclass(frozen=True)
class DistanceReport:
    holds: bool
    precondition_ok: bool
    witness: tuple[str, str] | None = None


def check_max_degree_distance(G: Graph) -> DistanceReport:
    """Every vertex lies within distance 2 of every maximum-degree vertex.

    Only meaningful for gap-free graphs; otherwise the report flags the
    precondition.  Isolated vertices are left out since they carry no variable
    of the edge ideal (a gap-free graph without them is connected).
    """
    if not is_gap_free(G).holds:
        return DistanceReport(False, False)
    active = [v for i, v in enumerate(G.vertices) if G.adj[i]]
    if not active:
        return DistanceReport(True, True)
    top = max(G.degree(v) for v in active)
    for x in active:
        if G.degree(x) != top:
            continue
        dist = bfs_distances(G, x)
        for y in active:
            if dist[y] > 2 or dist[y] == math.inf:
                return DistanceReport(False, True, (x, y))
    return DistanceReport(True, True)
