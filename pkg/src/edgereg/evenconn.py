"""Even connections with respect to a product of edges, and the colon graph.

A witness is a walk ``p0 p1 ... p(2k+1)`` (``k >= 1``) in which every step is
an edge of ``G`` and every odd step ``p(2l+1) p(2l+2)`` uses up one factor of
the product ``e1 ... es``.  Vertices may repeat and ``p0 == p(2k+1)`` is
allowed; the ``simple`` search mode forbids repeats for comparison.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Iterator

from .graph import Graph, build_graph, iter_bits
from .monomials import (Monomial, MonomialIdeal, VariableContext, colon, edge_ideal,
                        polarize, power, prime_name)

Pair = frozenset  # frozenset of one (self pair) or two vertex labels


@dataclass(frozen=True)
class EdgeProduct:
    """A fixed presentation ``e1 ... es`` of an s-fold product of edges."""

    graph: Graph
    factors: tuple[tuple[int, int], ...]  # vertex-index pairs, i < j

    def __post_init__(self):
        if not self.factors:
            raise ValueError("an edge product needs at least one factor")
        norm = []
        for a, b in self.factors:
            a, b = min(a, b), max(a, b)
            if not self.graph.adjacent(a, b):
                raise ValueError(f"{self.graph.vertices[a]}{self.graph.vertices[b]} is not an edge")
            norm.append((a, b))
        object.__setattr__(self, "factors", tuple(norm))

    @classmethod
    def from_labels(cls, G: Graph, pairs: Iterable[tuple[str, str]]) -> EdgeProduct:
        return cls(G, tuple((G.index(u), G.index(v)) for u, v in pairs))

    @classmethod
    def parse(cls, G: Graph, text: str) -> EdgeProduct:
        """``"xy,wz"``, ``"x-y,w-z"`` or ``"x y; w z"`` style edge lists."""
        pairs = []
        for tok in text.replace(";", ",").split(","):
            tok = tok.strip()
            if not tok:
                continue
            pairs.append(split_edge_token(G, tok))
        return cls.from_labels(G, pairs)

    @property
    def s(self) -> int:
        return len(self.factors)

    @cached_property
    def distinct(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(set(self.factors)))

    @cached_property
    def multiplicities(self) -> tuple[int, ...]:
        c = Counter(self.factors)
        return tuple(c[e] for e in self.distinct)

    @cached_property
    def product(self) -> Monomial:
        return Monomial.from_support((i for e in self.factors for i in e), self.graph.n)

    def format(self) -> str:
        V = self.graph.vertices
        sep = "" if all(len(v) == 1 for v in V) else "-"
        return ",".join(f"{V[a]}{sep}{V[b]}" for a, b in self.factors)


def split_edge_token(G: Graph, tok: str) -> tuple[str, str]:
    for sep in ("-", " "):
        if sep in tok:
            u, v = (p.strip() for p in tok.split(sep, 1))
            return u, v
    splits = [(tok[:i], tok[i:]) for i in range(1, len(tok))
              if tok[:i] in G.vertices and tok[i:] in G.vertices]
    if len(splits) != 1:
        raise ValueError(f"cannot read {tok!r} as an edge")
    return splits[0]


@dataclass(frozen=True)
class EvenConnectionWitness:
    walk: tuple[int, ...]              # p0 .. p(2k+1), vertex indices
    factor_assignment: tuple[int, ...]  # factor position used by odd step l

    @property
    def k(self) -> int:
        return len(self.factor_assignment)

    @property
    def ends(self) -> tuple[int, int]:
        return self.walk[0], self.walk[-1]

    def odd_steps(self) -> list[tuple[int, int]]:
        return [(self.walk[2 * l + 1], self.walk[2 * l + 2]) for l in range(self.k)]

    def format(self, G: Graph) -> str:
        V = G.vertices
        return f"{V[self.walk[0]]}: " + " ".join(V[p] for p in self.walk) + \
            " [" + " ".join(str(i + 1) for i in self.factor_assignment) + "]"


def witness_is_valid(G: Graph, ee: EdgeProduct, w: EvenConnectionWitness) -> bool:
    p = w.walk
    if len(p) < 4 or len(p) % 2 or len(w.factor_assignment) != len(p) // 2 - 1:
        return False
    if any(not G.adjacent(p[r], p[r + 1]) for r in range(len(p) - 1)):
        return False
    if len(set(w.factor_assignment)) != len(w.factor_assignment):
        return False
    for (a, b), f in zip(w.odd_steps(), w.factor_assignment):
        if not 0 <= f < ee.s or ee.factors[f] != (min(a, b), max(a, b)):
            return False
    return True


# -- search -----------------------------------------------------------------

def _e_moves(ee: EdgeProduct, x: int, residual: tuple[int, ...]):
    for d, (a, b) in enumerate(ee.distinct):
        if residual[d] and x in (a, b):
            y = b if x == a else a
            yield d, y, residual[:d] + (residual[d] - 1,) + residual[d + 1:]


def _reachable(G: Graph, ee: EdgeProduct, u: int):
    """BFS over (vertex at odd position, residual budget); returns parent map."""
    full = ee.multiplicities
    parent: dict = {}
    queue = deque()
    for p1 in iter_bits(G.adj[u]):
        st = (p1, full)
        if st not in parent:
            parent[st] = None
            queue.append(st)
    while queue:
        x, res = queue.popleft()
        for d, y, res2 in _e_moves(ee, x, res):
            for z in iter_bits(G.adj[y]):
                st = (z, res2)
                if st not in parent:
                    parent[st] = ((x, res), d, y)
                    queue.append(st)
    return parent


def _rebuild(ee: EdgeProduct, u: int, parent: dict, goal) -> EvenConnectionWitness:
    steps = []
    st = goal
    while parent[st] is not None:
        prev, d, y = parent[st]
        steps.append((prev[0], y, d, st[0]))
        st = prev
    steps.reverse()
    walk = [u]
    used: dict[int, int] = {}
    assignment = []
    for x, y, d, z in steps:
        walk += [x, y]
        edge = ee.distinct[d]
        nth = used.get(d, 0)
        used[d] = nth + 1
        assignment.append([i for i, f in enumerate(ee.factors) if f == edge][nth])
    walk.append(steps[-1][3])
    return EvenConnectionWitness(tuple(walk), tuple(assignment))


def find_even_connection(G: Graph, ee: EdgeProduct, u: str, v: str,
                         simple: bool = False, longest: bool = False) -> EvenConnectionWitness | None:
    """A witness with the fewest (or with ``longest``, the most) odd steps, or ``None``.

    Every route to a search state spends the same number of factors, so the
    residual budget of the goal state fixes ``k``.
    """
    ui, vi = G.index(u), G.index(v)
    if simple:
        walks = _simple_walks(G, ee, ui, vi)
        if longest:
            return max(walks, key=lambda w: w.k, default=None)
        return next(walks, None)
    parent = _reachable(G, ee, ui)
    full = ee.multiplicities
    goals = [st for st in parent if st[0] == vi and st[1] != full]
    if not goals:
        return None
    sign = 1 if longest else -1
    goal = min(goals, key=lambda st: sign * sum(st[1]))
    return _rebuild(ee, ui, parent, goal)


def connected_from(G: Graph, ee: EdgeProduct, u: int) -> dict[int, int]:
    """Vertices even-connected to ``u``, each with the longest ``k`` achieving it."""
    full = ee.multiplicities
    total = sum(full)
    out: dict[int, int] = {}
    for x, res in _reachable(G, ee, u):
        if res != full:
            out[x] = max(out.get(x, 0), total - sum(res))
    return out


def even_connected_pairs(G: Graph, ee: EdgeProduct, simple: bool = False) -> set[Pair]:
    """All unordered pairs ``{u, v}`` (``u == v`` allowed) with a witness."""
    V = G.vertices
    out = set()
    for u in range(G.n):
        if simple:
            targets = [v for v in range(u, G.n) if next(_simple_walks(G, ee, u, v), None)]
        else:
            targets = [v for v in connected_from(G, ee, u) if v >= u]
        out.update(frozenset((V[u], V[v])) for v in targets)
    return out


def connection_lengths(G: Graph, ee: EdgeProduct) -> dict[Pair, int]:
    """Longest ``k`` over witnesses, per even-connected pair."""
    V = G.vertices
    out: dict[Pair, int] = {}
    for u in range(G.n):
        for v, k in connected_from(G, ee, u).items():
            key = frozenset((V[u], V[v]))
            out[key] = max(out.get(key, 0), k)
    return out


def iter_witnesses(G: Graph, ee: EdgeProduct, u: int, v: int | None = None,
                   simple: bool = False) -> Iterator[EvenConnectionWitness]:
    """Every witness starting at ``u`` (ending at ``v`` if given), by depth-first search."""
    factors = ee.factors

    def rec(walk: list[int], used: list[int]):
        x = walk[-1]  # at an odd position
        if used and (v is None or x == v):
            if not simple or len(set(walk)) == len(walk) or \
                    (walk[0] == walk[-1] and len(set(walk)) == len(walk) - 1):
                yield EvenConnectionWitness(tuple(walk), tuple(used))
        for f, (a, b) in enumerate(factors):
            if f in used or x not in (a, b):
                continue
            # identical factors are interchangeable; only try the first unused copy
            if any(factors[g] == factors[f] and g not in used for g in range(f)):
                continue
            y = b if x == a else a
            if simple and y in walk:
                continue
            for z in iter_bits(G.adj[y]):
                if simple and z in walk and not (z == walk[0] and (v is None or z == v)):
                    continue
                yield from rec(walk + [y, z], used + [f])

    for p1 in iter_bits(G.adj[u]):
        yield from rec([u, p1], [])


def _simple_walks(G: Graph, ee: EdgeProduct, u: int, v: int):
    return iter_witnesses(G, ee, u, v, simple=True)


# -- the colon graph -------------------------------------------------------

@dataclass(frozen=True)
class ColonGraph:
    original: Graph
    base: Graph                     # G plus new edges plus whiskers
    whiskers: dict[str, str]        # self-connected vertex -> whisker vertex

    def new_edges(self) -> list[tuple[str, str]]:
        return [e for e in self.base.edges() if not _has_edge(self.original, *e)]

    def edge_list(self) -> list[tuple[str, str]]:
        return self.base.edges()


def _has_edge(G: Graph, u: str, v: str) -> bool:
    return u in G.vertices and v in G.vertices and G.has_edge(u, v)


def colon_graph(G: Graph, ee: EdgeProduct) -> ColonGraph:
    pairs = even_connected_pairs(G, ee)
    taken = set(G.vertices)
    whiskers: dict[str, str] = {}
    for u in G.vertices:  # same naming order as polarization
        if frozenset((u,)) in pairs:
            nm = prime_name(u, 1, taken)
            taken.add(nm)
            whiskers[u] = nm
    edges = list(G.edges())
    edges += [tuple(sorted(p)) for p in pairs if len(p) == 2]
    edges += list(whiskers.items())
    base = build_graph(edges, G.vertices + tuple(whiskers.values()), keep_order=True)
    return ColonGraph(G, base, whiskers)


# -- checks against the algebra ------------------------------------------

def algebraic_colon(G: Graph, ee: EdgeProduct) -> MonomialIdeal:
    I = edge_ideal(G)
    return colon(power(I, ee.s + 1), ee.product)


def _pair_monomial(G: Graph, p: Pair) -> Monomial:
    idx = [G.index(x) for x in p]
    if len(idx) == 1:
        idx *= 2
    return Monomial.from_support(idx, G.n)


@dataclass
class ColonReport:
    graph: Graph
    product: EdgeProduct
    non_quadratic: list[Monomial] = field(default_factory=list)
    missing: list[Monomial] = field(default_factory=list)   # in the colon, not explained
    extra: list[Monomial] = field(default_factory=list)     # explained, not in the colon

    @property
    def passed(self) -> bool:
        return not (self.non_quadratic or self.missing or self.extra)


def verify_colon_characterization(G: Graph, ee: EdgeProduct) -> ColonReport:
    """Compare the minimal generators of ``(I^(s+1) : e1...es)`` with ``E(G)`` plus
    the even-connected pairs."""
    J = algebraic_colon(G, ee)
    rep = ColonReport(G, ee)
    rep.non_quadratic = [g for g in J.gens if g.degree != 2]
    predicted = {Monomial.from_support(e, G.n) for e in G.edge_indices()}
    predicted |= {_pair_monomial(G, p) for p in even_connected_pairs(G, ee)}
    actual = set(J.gens)
    rep.missing = sorted(actual - predicted, key=Monomial.sort_key)
    rep.extra = sorted(predicted - actual, key=Monomial.sort_key)
    return rep


def edge_factorizations(G: Graph, m: Monomial) -> list[tuple[tuple[int, int], ...]]:
    """All multisets of edges of ``G`` whose product is ``m`` (nondecreasing tuples)."""
    edges = G.edge_indices()
    out = []

    def rec(start: int, rest: tuple[int, ...], acc: list):
        if not any(rest):
            out.append(tuple(acc))
            return
        first = next(i for i, e in enumerate(rest) if e)
        # the lowest remaining variable must be covered by some edge at or after start
        for t in range(start, len(edges)):
            a, b = edges[t]
            if first not in (a, b):
                continue
            if rest[a] and rest[b] and (a != b):
                r = list(rest)
                r[a] -= 1
                r[b] -= 1
                rec(t, tuple(r), acc + [(a, b)])

    rec(0, m.exps, [])
    return out


@dataclass
class IndependenceReport:
    factorizations: int
    pair_sets: list[frozenset]

    @property
    def passed(self) -> bool:
        return len(set(self.pair_sets)) <= 1


def verify_representation_independence(G: Graph, m: Monomial) -> IndependenceReport:
    facts = edge_factorizations(G, m)
    if not facts:
        raise ValueError("monomial is not a product of edges")
    sets = [frozenset(even_connected_pairs(G, EdgeProduct(G, f))) for f in facts]
    return IndependenceReport(len(facts), sets)


def neighbour_connection_violations(G: Graph, ee: EdgeProduct, w: EvenConnectionWitness,
                                    pairs: set[Pair] | None = None) -> list[tuple[str, str]]:
    """Neighbours of ``p(2j+1)`` and of ``p(2j'+2)`` (``j' >= j``) must be even-connected."""
    pairs = even_connected_pairs(G, ee) if pairs is None else pairs
    V = G.vertices
    bad = []
    p = w.walk
    for j in range(w.k):
        for j2 in range(j, w.k):
            for x in iter_bits(G.adj[p[2 * j + 1]]):
                for y in iter_bits(G.adj[p[2 * j2 + 2]]):
                    if frozenset((V[x], V[y])) not in pairs:
                        bad.append((V[x], V[y]))
    return bad


def shared_factor_vertex_holds(G: Graph, w1: EvenConnectionWitness, w2: EvenConnectionWitness,
                               pairs: set[Pair]) -> bool:
    """If factor steps of two witnesses share a vertex, each end of the first is
    even-connected to an end of the second."""
    verts1 = {x for st in w1.odd_steps() for x in st}
    verts2 = {x for st in w2.odd_steps() for x in st}
    if not verts1 & verts2:
        return True
    V = G.vertices
    z, w = w2.ends
    return all(frozenset((V[a], V[z])) in pairs or frozenset((V[a], V[w])) in pairs
               for a in w1.ends)


def all_edge_products(G: Graph, s: int) -> Iterator[EdgeProduct]:
    for combo in combinations_with_replacement(G.edge_indices(), s):
        yield EdgeProduct(G, combo)


def polarized_colon_matches(G: Graph, ee: EdgeProduct, cg: ColonGraph | None = None) -> bool:
    """``I(G')`` equals the polarization of the colon ideal, matched by variable names."""
    cg = cg or colon_graph(G, ee)
    pol = polarize(algebraic_colon(G, ee)).ideal
    names = pol.context.names
    got = {frozenset(names[i] for i, e in enumerate(g.exps) if e) for g in pol.gens}
    want = {frozenset(e) for e in cg.base.edges()}
    return got == want
