"""Finite simple graphs on labelled vertices with bit-set adjacency rows."""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph.

    ``vertices`` fixes the internal index of every label; ``adj[i]`` is the
    neighbourhood of vertex ``i`` as a bit mask.  Equality ignores the vertex
    order and compares label sets and edge sets.
    """

    vertices: tuple[str, ...]
    adj: tuple[int, ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex labels must be unique")
        if len(self.adj) != len(self.vertices):
            raise ValueError("adjacency rows do not match vertex count")
        for i, row in enumerate(self.adj):
            if row >> i & 1:
                raise ValueError(f"self-loop at {self.vertices[i]!r}")
            for j in iter_bits(row):
                if j >= len(self.vertices) or not self.adj[j] >> i & 1:
                    raise ValueError("adjacency must be symmetric")
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vertices)})

    # -- basic queries -------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown vertex {label!r}") from None

    def mask_of(self, labels: Iterable[str]) -> int:
        mask = 0
        for v in labels:
            mask |= 1 << self.index(v)
        return mask

    def labels_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in iter_bits(mask))

    def has_edge(self, u: str, v: str) -> bool:
        return bool(self.adj[self.index(u)] >> self.index(v) & 1)

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def neighbors(self, v: str) -> tuple[str, ...]:
        return self.labels_of(self.adj[self.index(v)])

    def degree(self, v: str) -> int:
        return self.adj[self.index(v)].bit_count()

    def edge_indices(self) -> list[tuple[int, int]]:
        """Edges as index pairs ``(i, j)`` with ``i < j``, in lexicographic order."""
        return [(i, j) for i in range(self.n) for j in iter_bits(self.adj[i] >> (i + 1) << (i + 1))]

    def edges(self) -> list[tuple[str, str]]:
        return [(self.vertices[i], self.vertices[j]) for i, j in self.edge_indices()]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def isolated(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.vertices) if not self.adj[i])

    def _key(self):
        return frozenset(self.vertices), frozenset(frozenset(e) for e in self.edges())

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"Graph(vertices={list(self.vertices)}, edges={self.edges()})"


def graph_from_masks(vertices: Sequence[str], adj: Sequence[int],
                     max_vertices: int = MAX_VERTICES) -> Graph:
    if len(vertices) > max_vertices:
        raise ValueError(f"graph has {len(vertices)} vertices; cap is {max_vertices}")
    return Graph(tuple(vertices), tuple(adj))


def build_graph(edges: Iterable[tuple[str, str]], vertices: Iterable[str] = (),
                *, keep_order: bool = False, max_vertices: int = MAX_VERTICES) -> Graph:
    """Graph with the given edges plus any extra (possibly isolated) vertices.

    Vertices are indexed in sorted label order unless ``keep_order`` is set, in
    which case first appearance (explicit vertices first, then edge endpoints)
    decides.  Repeated edges are harmless; self-loops raise ``ValueError``.
    """
    edges = [(str(u), str(v)) for u, v in edges]
    seen: dict[str, None] = dict.fromkeys(str(v) for v in vertices)
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop on {u!r}")
        seen.setdefault(u)
        seen.setdefault(v)
    labels = list(seen) if keep_order else sorted(seen)
    if any(not lab for lab in labels):
        raise ValueError("vertex labels must be nonempty")
    pos = {v: i for i, v in enumerate(labels)}
    adj = [0] * len(labels)
    for u, v in edges:
        adj[pos[u]] |= 1 << pos[v]
        adj[pos[v]] |= 1 << pos[u]
    return graph_from_masks(labels, adj, max_vertices)


def complement(G: Graph) -> Graph:
    full = G.all_mask
    return Graph(G.vertices, tuple(full & ~row & ~(1 << i) for i, row in enumerate(G.adj)))


def induced_subgraph_mask(G: Graph, mask: int) -> Graph:
    idx = list(iter_bits(mask))
    pos = {old: new for new, old in enumerate(idx)}
    adj = []
    for old in idx:
        row = 0
        for j in iter_bits(G.adj[old] & mask):
            row |= 1 << pos[j]
        adj.append(row)
    return Graph(tuple(G.vertices[i] for i in idx), tuple(adj))


def induced_subgraph(G: Graph, W: Iterable[str]) -> Graph:
    return induced_subgraph_mask(G, G.mask_of(W))


def delete_vertices(G: Graph, W: Iterable[str]) -> Graph:
    return induced_subgraph_mask(G, G.all_mask & ~G.mask_of(W))


def star(G: Graph, x: str) -> frozenset[str]:
    i = G.index(x)
    return frozenset(G.labels_of(G.adj[i] | 1 << i))


def distance(G: Graph, u: str, v: str) -> int | float:
    """Shortest path length, ``math.inf`` when ``u`` and ``v`` are disconnected."""
    src, dst = G.index(u), G.index(v)
    if src == dst:
        return 0
    seen = 1 << src
    frontier = 1 << src
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for i in iter_bits(frontier):
            nxt |= G.adj[i]
        nxt &= ~seen
        if nxt >> dst & 1:
            return d
        seen |= nxt
        frontier = nxt
    return math.inf


def bfs_distances(G: Graph, u: str) -> dict[str, int | float]:
    src = G.index(u)
    dist = {v: math.inf for v in G.vertices}
    dist[u] = 0
    queue = deque([src])
    while queue:
        i = queue.popleft()
        for j in iter_bits(G.adj[i]):
            if dist[G.vertices[j]] == math.inf:
                dist[G.vertices[j]] = dist[G.vertices[i]] + 1
                queue.append(j)
    return dist


@dataclass(frozen=True)
class CycleWitness:
    """Induced cycle given as vertex labels in cyclic order."""

    vertices: tuple[str, ...]

    def __len__(self):
        return len(self.vertices)


def is_induced_cycle(G: Graph, cycle: Sequence[str]) -> bool:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    idx = [G.index(v) for v in cycle]
    for a in range(k):
        for b in range(a + 1, k):
            consecutive = b == a + 1 or (a == 0 and b == k - 1)
            if G.adjacent(idx[a], idx[b]) != consecutive:
                return False
    return True


def find_induced_cycle_at_least(G: Graph, k: int) -> CycleWitness | None:
    """First induced cycle of length >= ``k`` found by induced-path extension.

    Cycles are rooted at their smallest vertex index and paths are grown in
    increasing index order, so the witness is deterministic.
    """
    if k < 4:
        raise ValueError("k must be at least 4")
    adj = G.adj

    def extend(path: list[int], forbidden: int) -> list[int] | None:
        # forbidden: path vertices and neighbours of interior path vertices;
        # a neighbour of the root may only close the cycle
        root, last = path[0], path[-1]
        for w in iter_bits(adj[last] & ~forbidden & ~((1 << root) - 1)):
            if adj[w] >> root & 1:
                if len(path) >= 2 and len(path) + 1 >= k:
                    return path + [w]
                continue
            found = extend(path + [w], forbidden | adj[last] | 1 << w)
            if found:
                return found
        return None

    for root in range(G.n):
        for second in iter_bits(adj[root]):
            if second < root:
                continue
            found = extend([root, second], 1 << root | 1 << second)
            if found:
                return CycleWitness(tuple(G.vertices[i] for i in found))
    return None


def induced_cycles_brute_force(G: Graph, k: int) -> list[tuple[str, ...]]:
    """Vertex sets (sorted labels) inducing a cycle of length >= k; subset enumeration."""
    out = []
    for size in range(max(k, 3), G.n + 1):
        for W in combinations(range(G.n), size):
            mask = sum(1 << i for i in W)
            if all((G.adj[i] & mask).bit_count() == 2 for i in W) and _connected(G, mask):
                out.append(tuple(G.vertices[i] for i in W))
    return out


def _connected(G: Graph, mask: int) -> bool:
    if not mask:
        return True
    start = mask & -mask
    seen = frontier = start
    while frontier:
        nxt = 0
        for i in iter_bits(frontier):
            nxt |= G.adj[i]
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


def is_connected(G: Graph) -> bool:
    return _connected(G, G.all_mask)


def is_chordal(G: Graph) -> bool:
    return find_induced_cycle_at_least(G, 4) is None


def relabel(G: Graph, mapping: dict[str, str]) -> Graph:
    return build_graph([(mapping.get(u, u), mapping.get(v, v)) for u, v in G.edges()],
                       [mapping.get(v, v) for v in G.vertices], keep_order=True)


def are_isomorphic(G: Graph, H: Graph) -> bool:
    """Brute-force isomorphism test for small graphs."""
    from itertools import permutations
    if G.n != H.n or G.num_edges != H.num_edges:
        return False
    if sorted(row.bit_count() for row in G.adj) != sorted(row.bit_count() for row in H.adj):
        return False
    g_edges = G.edge_indices()
    for perm in permutations(range(H.n)):
        if all(H.adjacent(perm[i], perm[j]) for i, j in g_edges):
            return True
    return False
