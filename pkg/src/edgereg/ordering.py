"""Ordering the minimal generators of powers of an edge ideal.

A base order ``L_1 > ... > L_k`` on the edges induces an order on
``mingen(I^n)``: every generator has a greedy *maximal expression*
``L_{i_1} ... L_{i_n}`` (``i_1 <= ... <= i_n``), and generators are compared
by the first position where their index sequences differ, smaller index
meaning larger generator.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .graph import Graph
from .monomials import Monomial, MonomialIdeal, edge_ideal, power


@lru_cache(maxsize=256)
def generator_set(I: MonomialIdeal, n: int) -> frozenset[tuple[int, ...]]:
    return frozenset(g.exps for g in power(I, n).gens)


@dataclass(frozen=True)
class EdgeOrder:
    """The base list ``L = (L_1 > L_2 > ... > L_k)`` of the generators of an edge ideal."""

    ideal: MonomialIdeal
    edges: tuple[Monomial, ...]
    _pos: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if sorted(e.exps for e in self.edges) != sorted(g.exps for g in self.ideal.gens):
            raise ValueError("edge order must list every minimal generator exactly once")
        if any(e.degree != 2 or not e.is_squarefree for e in self.edges):
            raise ValueError("edge order needs a squarefree quadratic ideal")
        object.__setattr__(self, "_pos", {e.exps: i for i, e in enumerate(self.edges)})

    def __len__(self):
        return len(self.edges)

    def __getitem__(self, i: int) -> Monomial:
        return self.edges[i]

    def index(self, m: Monomial) -> int:
        return self._pos[m.exps]

    @classmethod
    def default(cls, I: MonomialIdeal) -> EdgeOrder:
        """Lexicographic on the (sorted) endpoint label pairs."""
        names = I.context.names

        def key(g: Monomial):
            return sorted(names[i] for i, e in enumerate(g.exps) if e)

        return cls(I, tuple(sorted(I.gens, key=key)))

    @classmethod
    def from_pairs(cls, I: MonomialIdeal, pairs: Iterable[tuple[str, str]]) -> EdgeOrder:
        ctx = I.context
        return cls(I, tuple(Monomial.from_support((ctx.index(u), ctx.index(v)), len(ctx)) for u, v in pairs))

    @classmethod
    def permuted(cls, I: MonomialIdeal, rng) -> EdgeOrder:
        edges = list(cls.default(I).edges)
        rng.shuffle(edges)
        return cls(I, tuple(edges))

    def format(self) -> str:
        return " > ".join(e.format(self.ideal.context) for e in self.edges)


@dataclass(frozen=True)
class MaximalExpression:
    factors: tuple[int, ...]          # 0-based edge indices, nondecreasing
    exponent_vector: tuple[int, ...]  # (a_1, ..., a_k)

    def product(self, L: EdgeOrder) -> Monomial:
        out = Monomial.one(L.ideal.nvars)
        for i in self.factors:
            out = out * L[i]
        return out

    def format(self, L: EdgeOrder) -> str:
        return "*".join(L[i].format(L.ideal.context) for i in self.factors)


def _require_generator(m: Monomial, I: MonomialIdeal, n: int):
    if n < 1 or m.exps not in generator_set(I, n):
        raise ValueError(f"{m.format(I.context)} is not a minimal generator of I^{n}")


def edge_divides(m1: Monomial, m2: Monomial, I: MonomialIdeal, k: int, n: int) -> bool:
    """``m2 = m1 * m3`` for some minimal generator ``m3`` of ``I^(n-k)``."""
    if n <= k:
        raise ValueError("edge division needs n > k")
    _require_generator(m1, I, k)
    _require_generator(m2, I, n)
    return m1.divides(m2) and (m2 / m1).exps in generator_set(I, n - k)


def _greedy(m: Monomial, L: EdgeOrder, n: int) -> tuple[int, ...]:
    I = L.ideal
    cur = m
    factors = []
    for left in range(n - 1, -1, -1):
        rest = generator_set(I, left) if left else None
        for i, e in enumerate(L.edges):
            if not e.divides(cur):
                continue
            q = cur / e
            if (q.degree == 0) if left == 0 else (q.exps in rest):
                factors.append(i)
                cur = q
                break
        else:
            raise AssertionError("greedy factorization got stuck")
    return tuple(factors)


def maximal_expression(m: Monomial, L: EdgeOrder, n: int) -> MaximalExpression:
    _require_generator(m, L.ideal, n)
    factors = _greedy(m, L, n)
    vec = [0] * len(L)
    for i in factors:
        vec[i] += 1
    return MaximalExpression(factors, tuple(vec))


def belongs_to(m: Monomial, L: EdgeOrder, n: int) -> int:
    """0-based index of the first base edge that divides ``m`` as an edge."""
    if n == 1:
        return L.index(m)
    return maximal_expression(m, L, n).factors[0]


def compare(m1: Monomial, m2: Monomial, L: EdgeOrder, n: int) -> int:
    """1 if ``m1 > m2``, -1 if ``m1 < m2``, 0 if equal."""
    a = maximal_expression(m1, L, n).factors
    b = maximal_expression(m2, L, n).factors
    return (a < b) - (a > b)


def all_expressions(m: Monomial, L: EdgeOrder, n: int) -> list[tuple[int, ...]]:
    """Every exponent vector ``(a_1..a_k)`` with ``sum a = n`` and ``prod L_i^a_i = m``."""
    k = len(L)
    out = []

    def rec(i: int, cur: Monomial, left: int, vec: list[int]):
        if left == 0:
            if cur.degree == 0:
                out.append(tuple(vec + [0] * (k - len(vec))))
            return
        if i == k:
            return
        e = L[i]
        a = 0
        while True:
            rec(i + 1, cur, left - a, vec + [a])
            if a == left or not e.divides(cur):
                break
            cur = cur / e
            a += 1

    rec(0, m, n, [])
    return out


def compare_by_all_expressions(m1: Monomial, m2: Monomial, L: EdgeOrder, n: int) -> int:
    """Order defined by quantifying over expressions: ``M > N`` iff some expression
    of ``M`` is lex-larger than every expression of ``N``."""
    e1, e2 = all_expressions(m1, L, n), all_expressions(m2, L, n)
    if m1 == m2:
        return 0
    if any(all(a > b for b in e2) for a in e1):
        return 1
    if any(all(b > a for a in e1) for b in e2):
        return -1
    raise AssertionError("expressions do not decide the order")


@dataclass(frozen=True)
class OrderedGenerators:
    n: int
    order: EdgeOrder
    items: tuple[tuple[Monomial, MaximalExpression], ...]  # descending

    def __len__(self):
        return len(self.items)

    def __getitem__(self, j: int) -> Monomial:
        return self.items[j][0]

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self.items]

    def position(self, m: Monomial) -> int:
        for j, (g, _) in enumerate(self.items):
            if g == m:
                return j
        raise KeyError(m)

    def format_chain(self) -> str:
        ctx = self.order.ideal.context
        return " > ".join(m.format(ctx) for m, _ in self.items)

    def to_dict(self) -> dict:
        ctx = self.order.ideal.context
        return {"n": self.n, "base_order": [e.format(ctx) for e in self.order.edges],
                "order": [m.format(ctx) for m, _ in self.items],
                "expressions": [[i + 1 for i in ex.factors] for _, ex in self.items]}


def ordered_generators(I: MonomialIdeal, L: EdgeOrder, n: int) -> OrderedGenerators:
    if n < 1:
        raise ValueError("n must be positive")
    if L.ideal != I:
        raise ValueError("edge order belongs to a different ideal")
    items = [(g, maximal_expression(g, L, n)) for g in power(I, n).gens]
    items.sort(key=lambda it: it[1].factors)
    return OrderedGenerators(n, L, tuple(items))


# -- membership in powers of an edge ideal ------------------------------------

def _edge_index_pairs(I: MonomialIdeal) -> tuple[tuple[int, int], ...]:
    return tuple(tuple(i for i, e in enumerate(g.exps) if e) for g in I.gens)


@lru_cache(maxsize=None)
def _in_power(exps: tuple[int, ...], k: int, edges: tuple[tuple[int, int], ...]) -> bool:
    if k == 0:
        return True
    if sum(exps) < 2 * k:
        return False
    v = next(i for i, e in enumerate(exps) if e)
    lst = list(exps)
    lst[v] = 0
    if _in_power(tuple(lst), k, edges):
        return True
    for a, b in edges:
        if v in (a, b):
            w = b if a == v else a
            if exps[w]:
                lst = list(exps)
                lst[v] -= 1
                lst[w] -= 1
                if _in_power(tuple(lst), k - 1, edges):
                    return True
    return False


def in_edge_power(m: Monomial, I: MonomialIdeal, k: int) -> bool:
    """Whether ``m`` lies in ``I^k`` for a squarefree quadratic ideal ``I``."""
    return _in_power(m.exps, k, _edge_index_pairs(I))


# -- the ordering property --------------------------------------------------

@dataclass
class OrderingReport:
    n: int
    size: int
    entries: list[tuple[int, int, str, int | None]] = field(default_factory=list)
    counterexamples: list[tuple[int, int]] = field(default_factory=list)
    tally: dict[str, int] = field(default_factory=lambda: {"subset": 0, "principal": 0, "counterexample": 0})
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def counts(self) -> dict[str, int]:
        return dict(self.tally)

    def lines(self) -> list[str]:
        out = []
        for j, k, verdict, i in self.entries:
            out.append(f"{j} {k} -> " + (f"principal:{i}" if verdict == "principal" else verdict))
        return out

    def summary(self) -> dict:
        return {"counts": self.counts(), "n": self.n, "generators": self.size,
                "elapsed_ms": round(self.elapsed * 1000, 3)}

    def summary_json(self) -> str:
        return json.dumps(self.summary(), sort_keys=True)


def verify_ordering_property(G: Graph | MonomialIdeal, L: EdgeOrder | None, n: int,
                             keep_entries: bool = True) -> OrderingReport:
    """Check, for every ``k`` and ``j <= k`` (1-based, in ``L^(n)``), that
    ``(L_j : L_{k+1})`` is inside ``(I^(n+1) : L_{k+1})`` or inside some
    ``(L_i : L_{k+1})`` with ``i <= k`` generated by a single variable.

    Containment uses ``(L_j : L_{k+1}) = (L_j / gcd)`` and
    ``(L_j/gcd) * L_{k+1} = lcm(L_j, L_{k+1})``.
    """
    t0 = time.perf_counter()
    I = edge_ideal(G) if isinstance(G, Graph) else G
    L = L or EdgeOrder.default(I)
    og = ordered_generators(I, L, n)
    gens = [m.exps for m in og.monomials()]
    edges = _edge_index_pairs(I)
    report = OrderingReport(n, len(gens))
    for kk in range(1, len(gens)):          # kk = k, the 0-based index of L_{k+1}
        target = gens[kk]
        quots = [tuple(x - y if x > y else 0 for x, y in zip(g, target)) for g in gens[:kk]]
        # first i (1-based) certifying each variable
        variable_cert: dict[int, int] = {}
        for i, q in enumerate(quots):
            if sum(q) == 1:
                variable_cert.setdefault(q.index(1), i + 1)
        for j, q in enumerate(quots):
            lcm = tuple(x + y for x, y in zip(q, target))
            if _in_power(lcm, n + 1, edges):
                verdict, cert = "subset", None
            else:
                cands = [c for var, c in variable_cert.items() if q[var]]
                if cands:
                    verdict, cert = "principal", min(cands)
                else:
                    verdict, cert = "counterexample", None
                    report.counterexamples.append((j + 1, kk))
            report.tally[verdict] += 1
            if keep_entries or verdict == "counterexample":
                report.entries.append((j + 1, kk, verdict, cert))
    report.elapsed = time.perf_counter() - t0
    return report


# -- observations about the order -------------------------------------------

def observation_violations(og: OrderedGenerators, previous: OrderedGenerators | None = None) -> dict[str, list]:
    """Violations of the three structural facts about ``L^(n)``:

    * ``belongs``: generators belonging to earlier edges come first;
    * ``quotient``: within one edge ``L_i``, order agrees with order of ``m / L_i`` in ``L^(n-1)``;
    * ``lift``: ``gh m'' > m`` whenever ``gh`` is in the maximal expression of ``m = gh m'`` and ``m'' > m'``.
    """
    L, n = og.order, og.n
    out: dict[str, list] = {"belongs": [], "quotient": [], "lift": []}
    if n < 2:
        return out
    prev = previous or ordered_generators(L.ideal, L, n - 1)
    prev_pos = {m.exps: p for p, m in enumerate(prev.monomials())}
    pos = {m.exps: p for p, m in enumerate(og.monomials())}
    firsts = [ex.factors[0] for _, ex in og.items]
    for a in range(len(og)):
        for b in range(len(og)):
            if firsts[a] < firsts[b] and not a < b:
                out["belongs"].append((a, b))
            if a < b and firsts[a] == firsts[b]:
                e = L[firsts[a]]
                qa, qb = (og[a] / e).exps, (og[b] / e).exps
                if not prev_pos[qa] < prev_pos[qb]:
                    out["quotient"].append((a, b))
    for a, (m, ex) in enumerate(og.items):
        for idx in set(ex.factors):
            gh = L[idx]
            rest = m / gh
            for p2 in range(prev_pos[rest.exps]):
                lifted = gh * prev[p2]
                if not pos[lifted.exps] < a:
                    out["lift"].append((a, idx, p2))
    return out
