"""Executable checks of the regularity bounds on small graphs.

Every ``verify_*`` function returns a :class:`VerificationReport`.  Instances
that do not meet a statement's hypotheses are counted as skipped; a failure
records the graph and parameters so it can be replayed.
"""
from __future__ import annotations

import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

from . import classes
from .betti import as_field, betti_table, is_linear, regularity
from .errors import ResourceLimitError
from .evenconn import (EdgeProduct, all_edge_products, colon_graph, connection_lengths,
                       even_connected_pairs, iter_witnesses, neighbour_connection_violations,
                       polarized_colon_matches, shared_factor_vertex_holds,
                       verify_colon_characterization, verify_representation_independence,
                       witness_is_valid)
from .graph import (Graph, build_graph, complement, delete_vertices, induced_cycles_brute_force,
                    induced_subgraph, iter_bits, star)
from .monomials import (Monomial, MonomialIdeal, colon, edge_ideal, ideal_sum, power)
from .ordering import (EdgeOrder, in_edge_power, observation_violations, ordered_generators,
                       verify_ordering_property)


# -- reports ------------------------------------------------------------------

def graph_to_dict(G: Graph) -> dict:
    return {"vertices": list(G.vertices), "edges": [list(e) for e in G.edges()]}


def graph_from_dict(d: dict) -> Graph:
    return build_graph([tuple(e) for e in d["edges"]], d["vertices"], keep_order=True)


@dataclass
class VerificationReport:
    theorem: str
    field_char: int = 2
    seed: int | None = None
    checked: int = 0
    skipped: int = 0
    partial: int = 0  # instances cut short by a resource cap
    failures: list[dict] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures and self.checked > 0

    def fail(self, G: Graph, params: dict, observed, expected):
        self.failures.append({"graph": graph_to_dict(G), "params": params,
                              "observed": observed, "expected": expected})

    def merge(self, other: VerificationReport) -> VerificationReport:
        self.checked += other.checked
        self.skipped += other.skipped
        self.partial += other.partial
        self.failures.extend(other.failures)
        self.elapsed += other.elapsed
        return self

    def to_dict(self, timing: bool = True) -> dict:
        out = {"theorem": self.theorem, "checked": self.checked, "skipped": self.skipped,
               "partial": self.partial, "failures": self.failures, "seed": self.seed,
               "field": self.field_char}
        if timing:
            out["elapsed_ms"] = round(self.elapsed * 1000, 3)
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> VerificationReport:
        return cls(d["theorem"], d["field"], d["seed"], d["checked"], d.get("skipped", 0),
                   d.get("partial", 0), list(d["failures"]), d.get("elapsed_ms", 0.0) / 1000)

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} {self.theorem}: checked={self.checked} skipped={self.skipped} "
                f"partial={self.partial} failures={len(self.failures)}")


REPORT_KEYS = {"theorem": str, "checked": int, "failures": list, "field": int}


def validate_report_dict(d: dict) -> None:
    """Raise ``ValueError`` unless ``d`` has the published report shape."""
    for key, typ in REPORT_KEYS.items():
        if not isinstance(d.get(key), typ):
            raise ValueError(f"report field {key!r} missing or not {typ.__name__}")
    if "seed" not in d or not (d["seed"] is None or isinstance(d["seed"], int)):
        raise ValueError("report field 'seed' must be an int or null")
    for f in d["failures"]:
        if set(f) != {"graph", "params", "observed", "expected"}:
            raise ValueError("malformed failure record")


class _Timer:
    def __init__(self, report: VerificationReport):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.elapsed += time.perf_counter() - self.t0
        return False


def _reg(I: MonomialIdeal, field_char: int) -> int:
    return regularity(I, field_char)


def _reg_or_none(I: MonomialIdeal, field_char: int) -> float:
    """Regularity with the unit ideal mapped to ``-inf`` (its quotient is zero)."""
    if I.is_unit:
        return -math.inf
    return regularity(I, field_char)


def _graph_reg(G: Graph, field_char: int) -> int | None:
    return None if G.num_edges == 0 else regularity(edge_ideal(G), field_char)


# -- regularity bounds for gap-free graphs ---------------------------------

def verify_section3_bounds(G: Graph, field_char: int = 2) -> VerificationReport:
    """Gap-free and cricket-free gives reg <= 3; gap-free and n-claw-free gives reg <= n."""
    rep = VerificationReport("gap-free-bounds", field_char)
    with _Timer(rep):
        if G.num_edges == 0 or not classes.is_gap_free(G):
            rep.skipped += 1
            return rep
        r = _graph_reg(G, field_char)
        applied = False
        if classes.is_cricket_free(G):
            applied = True
            if r > 3:
                rep.fail(G, {"clause": "cricket_free"}, r, "<= 3")
        top = max(G.degree(v) for v in G.vertices)
        for n in range(2, top + 2):
            if classes.is_n_claw_free(G, n):
                applied = True
                if r > n:
                    rep.fail(G, {"clause": f"{n}_claw_free"}, r, f"<= {n}")
        if applied:
            rep.checked += 1
        else:
            rep.skipped += 1
    return rep


def verify_thm_5_2(G: Graph, s: int, field_char: int = 2) -> VerificationReport:
    """``reg(I^(s+1)) <= max{reg(I^(s+1) : m) + 2s over m in mingen(I^s), reg(I^s)}``."""
    if s < 1:
        raise ValueError("s must be at least 1")
    rep = VerificationReport("colon-bound", field_char)
    with _Timer(rep):
        if G.num_edges == 0:
            rep.skipped += 1
            return rep
        I = edge_ideal(G)
        try:
            big = power(I, s + 1)
            lhs = _reg(big, field_char)
            terms = [_reg(I if s == 0 else power(I, s), field_char)]
            terms += [_reg(colon(big, m), field_char) + 2 * s for m in power(I, s).gens]
        except ResourceLimitError:
            rep.partial += 1
            return rep
        rep.checked += 1
        if lhs > max(terms):
            rep.fail(G, {"s": s}, lhs, f"<= {max(terms)}")
    return rep


def verify_linear_colons(G: Graph, s_max: int, field_char: int = 2) -> VerificationReport:
    """If every ``(I^(s+1) : m)`` has regularity <= 2 and reg(I) <= 4, the powers are linear."""
    rep = VerificationReport("linear-colons", field_char)
    with _Timer(rep):
        if G.num_edges == 0:
            rep.skipped += 1
            return rep
        I = edge_ideal(G)
        try:
            if _reg(I, field_char) > 4:
                rep.skipped += 1
                return rep
            for s in range(1, s_max):
                big = power(I, s + 1)
                if any(_reg(colon(big, m), field_char) > 2 for m in power(I, s).gens):
                    rep.skipped += 1
                    return rep
            for s in range(1, s_max):
                r = _reg(power(I, s + 1), field_char)
                if r != 2 * s + 2:
                    rep.fail(G, {"s": s + 1}, r, 2 * s + 2)
        except ResourceLimitError:
            rep.partial += 1
            return rep
        rep.checked += 1
    return rep


def _power_check(name: str, G: Graph, s_max: int, field_char: int, applies: Callable[[Graph], bool],
                 expected: Callable[[int, int], tuple[str, int]]) -> VerificationReport:
    rep = VerificationReport(name, field_char)
    with _Timer(rep):
        if G.num_edges == 0 or not applies(G):
            rep.skipped += 1
            return rep
        I = edge_ideal(G)
        r = _reg(I, field_char)
        for s in range(2, s_max + 1):
            try:
                got = _reg(power(I, s), field_char)
            except ResourceLimitError:
                rep.partial += 1
                continue
            rep.checked += 1
            op, bound = expected(s, r)
            if (op == "==" and got != bound) or (op == "<=" and got > bound):
                rep.fail(G, {"s": s, "reg_I": r}, got, f"{op} {bound}")
    return rep


def verify_thm_6_16(G: Graph, s_max: int, field_char: int = 2) -> VerificationReport:
    """Complement chordal (linear ``I``) gives ``reg(I^s) = 2s``."""
    return _power_check("linear-powers", G, s_max, field_char,
                        lambda H: classes.complement_chordal(H).holds, lambda s, r: ("==", 2 * s))


def verify_thm_6_17(G: Graph, s_max: int, field_char: int = 2) -> VerificationReport:
    """Gap-free and cricket-free gives ``reg(I^s) = 2s`` for ``s >= 2``."""
    return _power_check("cricket-free-powers", G, s_max, field_char,
                        lambda H: bool(classes.is_gap_free(H)) and bool(classes.is_cricket_free(H)),
                        lambda s, r: ("==", 2 * s))


def verify_thm_6_19(G: Graph, s_max: int, field_char: int = 2) -> VerificationReport:
    """Gap-free with ``reg(I) = r`` gives ``reg(I^s) <= 2s + r - 1``."""
    return _power_check("gap-free-powers", G, s_max, field_char,
                        lambda H: classes.is_gap_free(H).holds, lambda s, r: ("<=", 2 * s + r - 1))


# -- even connections and the colon graph --------------------------------

def verify_colon_generators(G: Graph, s_max: int = 2, field_char: int = 2) -> VerificationReport:
    """Colon by every edge product with ``s <= s_max`` is quadratic and matches the
    even-connected pairs; the polarized colon is the edge ideal of the colon graph."""
    rep = VerificationReport("colon-generators", field_char)
    with _Timer(rep):
        if G.num_edges == 0:
            rep.skipped += 1
            return rep
        for s in range(1, s_max + 1):
            for ee in all_edge_products(G, s):
                rep.checked += 1
                r = verify_colon_characterization(G, ee)
                if not r.passed:
                    ctx = edge_ideal(G).context
                    rep.fail(G, {"product": ee.format()},
                             {"non_quadratic": [m.format(ctx) for m in r.non_quadratic],
                              "missing": [m.format(ctx) for m in r.missing],
                              "extra": [m.format(ctx) for m in r.extra]}, "match")
                elif not polarized_colon_matches(G, ee):
                    rep.fail(G, {"product": ee.format()}, "colon graph differs", "polarized colon")
    return rep


def verify_product_independence(G: Graph, s_max: int = 2) -> VerificationReport:
    """Even-connected pairs do not depend on how a product of edges is factored."""
    rep = VerificationReport("presentation-independence")
    with _Timer(rep):
        if G.num_edges == 0:
            rep.skipped += 1
            return rep
        seen = set()
        for s in range(1, s_max + 1):
            for ee in all_edge_products(G, s):
                m = ee.product
                if m in seen:
                    continue
                seen.add(m)
                r = verify_representation_independence(G, m)
                rep.checked += 1
                if not r.passed:
                    rep.fail(G, {"monomial": m.format(edge_ideal(G).context)},
                             [sorted("".join(sorted(p)) for p in ps) for ps in r.pair_sets], "identical")
    return rep


def verify_witness_lemmas(G: Graph, ee: EdgeProduct, rng: random.Random | None = None,
                          pair_samples: int = 50, max_witnesses: int = 400) -> VerificationReport:
    """Soundness of witnesses, neighbour propagation along a witness, and cross
    connections between witnesses whose factor steps share a vertex."""
    rng = rng or random.Random(0)
    rep = VerificationReport("witness-lemmas")
    with _Timer(rep):
        pairs = even_connected_pairs(G, ee)
        I = edge_ideal(G)
        witnesses = []
        for u in range(G.n):
            for w in iter_witnesses(G, ee, u):
                witnesses.append(w)
                if len(witnesses) >= max_witnesses:
                    break
        if not witnesses:
            rep.skipped += 1
            return rep
        for w in witnesses:
            rep.checked += 1
            a, b = w.ends
            prod = Monomial.from_support((a, b), G.n) * ee.product
            if not witness_is_valid(G, ee, w) or not in_edge_power(prod, I, ee.s + 1):
                rep.fail(G, {"product": ee.format(), "walk": w.format(G)}, "unsound", "sound")
            bad = neighbour_connection_violations(G, ee, w, pairs)
            if bad:
                rep.fail(G, {"product": ee.format(), "walk": w.format(G)},
                         sorted("".join(p) for p in bad)[:10], "all neighbours connected")
        for _ in range(pair_samples):
            w1, w2 = rng.choice(witnesses), rng.choice(witnesses)
            rep.checked += 1
            if not shared_factor_vertex_holds(G, w1, w2, pairs):
                rep.fail(G, {"product": ee.format(), "walks": [w1.format(G), w2.format(G)]},
                         "no cross connection", "cross connection")
    return rep


def _anticycles(H: Graph, k: int = 5) -> list[tuple[str, ...]]:
    return induced_cycles_brute_force(complement(H), k)


def _same_induced(A: Graph, B: Graph, W: Iterable[str]) -> bool:
    W = list(W)
    return set(map(frozenset, induced_subgraph(A, W).edges())) == \
        set(map(frozenset, induced_subgraph(B, W).edges()))


def verify_structure_lemmas(G: Graph, ee: EdgeProduct, rng: random.Random | None = None,
                            deletion_samples: int = 8) -> VerificationReport:
    """For gap-free ``G``: the colon graph is gap-free, its long anticycles are
    anticycles of ``G``, and removing the star of an endpoint of a longest
    connection leaves only edges of ``G`` plus isolated whisker vertices."""
    rng = rng or random.Random(0)
    rep = VerificationReport("colon-graph-structure")
    with _Timer(rep):
        if not classes.is_gap_free(G):
            rep.skipped += 1
            return rep
        cg = colon_graph(G, ee)
        H = cg.base
        rep.checked += 1
        gap = classes.is_gap_free(H)
        if not gap:
            rep.fail(G, {"product": ee.format(), "clause": "gap_free"}, list(gap.witness), "no gap")
        for W in _anticycles(H):
            rep.checked += 1
            if not set(W) <= set(G.vertices) or not _same_induced(G, H, W):
                rep.fail(G, {"product": ee.format(), "clause": "anticycle"}, list(W), "anticycle of G")
        lengths = connection_lengths(G, ee)
        Gedges = set(map(frozenset, G.edges()))
        deletions = [frozenset()]
        for _ in range(deletion_samples):
            size = rng.randint(1, max(1, G.n - 2))
            deletions.append(frozenset(rng.sample(G.vertices, min(size, G.n))))
        for Y in deletions:
            alive = {p: k for p, k in lengths.items() if not p & Y}
            if not alive:
                continue
            kmax = max(alive.values())
            for p, k in alive.items():
                if k != kmax:
                    continue
                for u in p:
                    rep.checked += 1
                    rest = delete_vertices(H, set(Y) | star(H, u))
                    stray = [e for e in rest.edges() if frozenset(e) not in Gedges]
                    if stray:
                        rep.fail(G, {"product": ee.format(), "clause": "longest", "deleted": sorted(Y),
                                     "u": u}, [list(e) for e in stray], "edges of G only")
    return rep


# -- basic lemmas -----------------------------------------------------------

def verify_vertex_deletion(G: Graph, field_char: int = 2) -> VerificationReport:
    """``reg(I, x) <= reg(I)`` for every variable; in graph terms ``reg(G - v) <= reg(G)``."""
    rep = VerificationReport("vertex-deletion", field_char)
    with _Timer(rep):
        if G.num_edges == 0:
            rep.skipped += 1
            return rep
        I = edge_ideal(G)
        r = _reg(I, field_char)
        for i, v in enumerate(G.vertices):
            x = Monomial.variable(i, G.n)
            rep.checked += 1
            rx = _reg(ideal_sum(I, x), field_char)
            if rx > r:
                rep.fail(G, {"x": v}, rx, f"<= {r}")
            H = delete_vertices(G, [v])
            if H.num_edges:
                rh = _graph_reg(H, field_char)
                if rh > r:
                    rep.fail(G, {"deleted": v}, rh, f"<= {r}")
    return rep


def _probe_monomials(G: Graph, rng: random.Random, extra: int) -> list[Monomial]:
    n = G.n
    out = [Monomial.variable(i, n) for i in range(n)]
    out += [Monomial.from_support(e, n) for e in G.edge_indices()]
    out += [Monomial.from_support((i, j), n) for i, j in combinations(range(n), 2) if not G.adjacent(i, j)]
    out += [Monomial.from_support((i, i), n) for i in range(n)]
    for _ in range(extra):
        out.append(Monomial.from_support(rng.choices(range(n), k=rng.randint(1, 3)), n))
    return out


def verify_colon_sum_bound(G: Graph, field_char: int = 2, rng: random.Random | None = None,
                           extra: int = 4) -> VerificationReport:
    """``reg(I) <= max{reg(I : m) + deg m, reg(I, m)}``; for a variable occurring in ``I``
    the regularity equals one of the two terms."""
    rng = rng or random.Random(0)
    rep = VerificationReport("colon-sum-bound", field_char)
    with _Timer(rep):
        if G.num_edges == 0:
            rep.skipped += 1
            return rep
        I = edge_ideal(G)
        r = _reg(I, field_char)
        for m in _probe_monomials(G, rng, extra):
            rep.checked += 1
            a = _reg_or_none(colon(I, m), field_char) + m.degree
            b = _reg(ideal_sum(I, m), field_char)
            name = m.format(I.context)
            if r > max(a, b):
                rep.fail(G, {"m": name}, r, f"<= max({a}, {b})")
            if m.degree == 1 and G.adj[m.exps.index(1)] and r not in (a, b):
                rep.fail(G, {"m": name, "clause": "equality"}, r, [a, b])
    return rep


def verify_star_split(G: Graph, field_char: int = 2) -> VerificationReport:
    """For each non-isolated vertex ``x``: ``(I : x) = (I(G - st x), N(x))``,
    ``(I, x) = (I(G - x), x)`` and ``reg(G)`` is one of ``reg(I : x) + 1``, ``reg(I, x)``
    and at most their maximum."""
    rep = VerificationReport("star-split", field_char)
    with _Timer(rep):
        if G.num_edges == 0:
            rep.skipped += 1
            return rep
        I = edge_ideal(G)
        ctx = I.context
        r = _reg(I, field_char)
        for i, v in enumerate(G.vertices):
            if not G.adj[i]:
                continue
            rep.checked += 1
            x = Monomial.variable(i, G.n)
            Icol, Isum = colon(I, x), ideal_sum(I, x)
            keep = G.all_mask & ~(G.adj[i] | 1 << i)
            rest = [Monomial.from_support(e, G.n) for e in G.edge_indices()
                    if keep >> e[0] & 1 and keep >> e[1] & 1]
            nbrs = [Monomial.variable(j, G.n) for j in iter_bits(G.adj[i])]
            want_col = ideal_sum(MonomialIdeal(ctx, ()), *rest, *nbrs)
            minus = [Monomial.from_support(e, G.n) for e in G.edge_indices() if i not in e]
            want_sum = ideal_sum(MonomialIdeal(ctx, ()), *minus, x)
            if set(Icol.gens) != set(want_col.gens):
                rep.fail(G, {"x": v, "clause": "colon"}, Icol.format(), want_col.format())
            if set(Isum.gens) != set(want_sum.gens):
                rep.fail(G, {"x": v, "clause": "sum"}, Isum.format(), want_sum.format())
            a, b = _reg(Icol, field_char) + 1, _reg(Isum, field_char)
            if r > max(a, b) or r not in (a, b):
                rep.fail(G, {"x": v, "clause": "regularity"}, r, [a, b])
    return rep


def verify_max_degree_distance(G: Graph) -> VerificationReport:
    rep = VerificationReport("max-degree-distance")
    with _Timer(rep):
        d = classes.check_max_degree_distance(G)
        if not d.precondition_ok:
            rep.skipped += 1
            return rep
        rep.checked += 1
        if not d.holds:
            rep.fail(G, {}, list(d.witness), "distance <= 2")
    return rep


def verify_claw_implies_cricket(G: Graph) -> VerificationReport:
    rep = VerificationReport("claw-free-cricket-free")
    with _Timer(rep):
        rep.checked += 1
        if classes.is_claw_free(G) and not classes.is_cricket_free(G):
            rep.fail(G, {}, "cricket", "cricket-free")
    return rep


def verify_linearity_criterion(G: Graph, s_max: int = 2, field_char: int = 2) -> VerificationReport:
    """Linear resolution of ``I^s`` iff ``reg(I^s) = 2s``; ``I`` linear iff the complement is chordal."""
    rep = VerificationReport("linearity-criterion", field_char)
    with _Timer(rep):
        if G.num_edges == 0:
            rep.skipped += 1
            return rep
        I = edge_ideal(G)
        for s in range(1, s_max + 1):
            try:
                B = betti_table(power(I, s), field_char)
            except ResourceLimitError:
                rep.partial += 1
                continue
            rep.checked += 1
            if is_linear(B, s) != (B.regularity == 2 * s):
                rep.fail(G, {"s": s}, B.to_dict(), "linear iff reg = 2s")
            if s == 1 and (B.regularity == 2) != classes.complement_chordal(G).holds:
                rep.fail(G, {"s": 1, "clause": "chordal complement"}, B.regularity,
                         "2 iff complement chordal")
    return rep


# -- the generator order ------------------------------------------------

def verify_order_observations(G: Graph, n_max: int = 3, orders: int = 2,
                              rng: random.Random | None = None) -> VerificationReport:
    rng = rng or random.Random(0)
    rep = VerificationReport("order-observations")
    with _Timer(rep):
        if G.num_edges == 0:
            rep.skipped += 1
            return rep
        I = edge_ideal(G)
        Ls = [EdgeOrder.default(I)] + [EdgeOrder.permuted(I, rng) for _ in range(orders - 1)]
        for L in Ls:
            prev = ordered_generators(I, L, 1)
            for n in range(2, n_max + 1):
                og = ordered_generators(I, L, n)
                rep.checked += 1
                bad = observation_violations(og, prev)
                for kind, items in bad.items():
                    if items:
                        rep.fail(G, {"n": n, "order": L.format(), "clause": kind}, items[:5], [])
                prev = og
    return rep


def verify_ordering(G: Graph, n_max: int = 3, orders: int = 5,
                    rng: random.Random | None = None) -> VerificationReport:
    rng = rng or random.Random(0)
    rep = VerificationReport("ordering-property")
    with _Timer(rep):
        if G.num_edges == 0:
            rep.skipped += 1
            return rep
        I = edge_ideal(G)
        for _ in range(orders):
            L = EdgeOrder.permuted(I, rng)
            for n in range(1, n_max + 1):
                r = verify_ordering_property(I, L, n, keep_entries=False)
                rep.checked += 1
                if not r.passed:
                    rep.fail(G, {"n": n, "order": L.format()}, r.counterexamples[:10], [])
    return rep


# -- random graphs ------------------------------------------------------------

class SamplingBudgetExceeded(RuntimeError):
    def __init__(self, attempts: int):
        super().__init__(f"no graph in the requested class after {attempts} attempts")
        self.attempts = attempts


CLASS_PREDICATES: dict[str, Callable[[Graph], bool]] = {
    "gap_free": lambda G: classes.is_gap_free(G).holds,
    "cricket_free": lambda G: classes.is_cricket_free(G).holds,
    "claw_free": lambda G: classes.is_claw_free(G).holds,
    "complement_chordal": lambda G: classes.complement_chordal(G).holds,
    "has_edges": lambda G: G.num_edges > 0,
}


def vertex_labels(n: int) -> list[str]:
    if n <= 26:
        return [chr(ord("a") + i) for i in range(n)]
    return [f"v{i}" for i in range(n)]


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    V = vertex_labels(n)
    edges = [(V[i], V[j]) for i, j in combinations(range(n), 2) if rng.random() < p]
    return build_graph(edges, V, keep_order=True)


def random_graph_in_class(n: int, wanted: Iterable[str], seed: int, p: float = 0.5,
                          max_attempts: int = 20000) -> Graph:
    """Rejection sampling; the same ``(n, wanted, seed, p)`` always gives the same graph."""
    if n < 2:
        raise ValueError("n must be at least 2")
    preds = [CLASS_PREDICATES[c] for c in wanted]
    rng = random.Random(seed)
    for _ in range(max_attempts):
        G = random_graph(n, p, rng)
        if all(pred(G) for pred in preds):
            return G
    raise SamplingBudgetExceeded(max_attempts)


# -- open-ended search --------------------------------------------------------

@dataclass
class HuntReport:
    tried: int = 0
    eligible: int = 0
    nonlinear: list[dict] = field(default_factory=list)
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        return {"tried": self.tried, "eligible": self.eligible, "nonlinear": self.nonlinear,
                "elapsed_ms": round(self.elapsed * 1000, 3)}


def hunt(n_max: int, count: int, seed: int, s_max: int = 2, field_char: int = 2) -> HuntReport:
    """Look for gap-free graphs with ``reg(I) <= 3`` whose higher powers are not linear."""
    rng = random.Random(seed)
    out = HuntReport()
    t0 = time.perf_counter()
    for _ in range(count):
        n = rng.randint(4, n_max)
        G = random_graph(n, rng.uniform(0.3, 0.8), rng)
        out.tried += 1
        if G.num_edges == 0 or not classes.is_gap_free(G):
            continue
        I = edge_ideal(G)
        if _reg(I, field_char) > 3:
            continue
        out.eligible += 1
        for s in range(2, s_max + 1):
            try:
                r = _reg(power(I, s), field_char)
            except ResourceLimitError:
                break
            if r != 2 * s:
                out.nonlinear.append({"graph": graph_to_dict(G), "s": s, "reg": r})
    out.elapsed = time.perf_counter() - t0
    return out


# -- registry used by the command line --------------------------------------

def _per_product(fn):
    def run(G: Graph, s_max: int, field_char: int, rng: random.Random) -> VerificationReport:
        rep = None
        for s in range(1, min(s_max, 2) + 1):
            for ee in all_edge_products(G, s):
                r = fn(G, ee, rng)
                rep = r if rep is None else rep.merge(r)
        if rep is None:
            rep = VerificationReport(fn.__name__)
            rep.skipped += 1
        return rep
    return run


CHECKS: dict[str, Callable[[Graph, int, int, random.Random], VerificationReport]] = {
    "gap-free-bounds": lambda G, s, f, rng: verify_section3_bounds(G, f),
    "colon-bound": lambda G, s, f, rng: _merge(verify_thm_5_2(G, k, f) for k in range(1, s + 1)),
    "linear-colons": lambda G, s, f, rng: verify_linear_colons(G, s, f),
    "linear-powers": lambda G, s, f, rng: verify_thm_6_16(G, s, f),
    "cricket-free-powers": lambda G, s, f, rng: verify_thm_6_17(G, s, f),
    "gap-free-powers": lambda G, s, f, rng: verify_thm_6_19(G, s, f),
    "colon-generators": lambda G, s, f, rng: verify_colon_generators(G, min(s, 2), f),
    "presentation-independence": lambda G, s, f, rng: verify_product_independence(G, min(s, 2)),
    "witness-lemmas": _per_product(verify_witness_lemmas),
    "colon-graph-structure": _per_product(verify_structure_lemmas),
    "vertex-deletion": lambda G, s, f, rng: verify_vertex_deletion(G, f),
    "colon-sum-bound": lambda G, s, f, rng: verify_colon_sum_bound(G, f, rng),
    "star-split": lambda G, s, f, rng: verify_star_split(G, f),
    "max-degree-distance": lambda G, s, f, rng: verify_max_degree_distance(G),
    "claw-free-cricket-free": lambda G, s, f, rng: verify_claw_implies_cricket(G),
    "linearity-criterion": lambda G, s, f, rng: verify_linearity_criterion(G, s, f),
    "order-observations": lambda G, s, f, rng: verify_order_observations(G, max(s, 2), 2, rng),
    "ordering-property": lambda G, s, f, rng: verify_ordering(G, s, 5, rng),
}


def _merge(reports: Iterable[VerificationReport]) -> VerificationReport:
    out = None
    for r in reports:
        out = r if out is None else out.merge(r)
    return out


def run_check(name: str, G: Graph, s_max: int = 2, field_char: int = 2,
              seed: int = 0) -> VerificationReport:
    if name not in CHECKS:
        raise KeyError(f"unknown check {name!r}; choose from {', '.join(sorted(CHECKS))}")
    as_field(field_char)
    rep = CHECKS[name](G, s_max, field_char, random.Random(seed))
    rep.theorem = name
    rep.field_char = field_char
    rep.seed = seed
    return rep


def _run_task(task) -> VerificationReport:
    return run_check(*task)


def run_corpus(name: str, graphs: Iterable[Graph], s_max: int = 2, field_char: int = 2,
               seed: int = 0, jobs: int = 1) -> VerificationReport:
    """Run one check over many graphs; each graph gets its own RNG split from ``seed``.

    With ``jobs > 1`` graphs are spread over worker processes; reports are
    merged in input order, so the result does not depend on ``jobs``.
    """
    tasks = [(name, G, s_max, field_char, seed * 1_000_003 + k) for k, G in enumerate(graphs)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        parts = [_run_task(t) for t in tasks]
    total = VerificationReport(name, field_char, seed)
    for part in parts:
        total.merge(part)
    return total
