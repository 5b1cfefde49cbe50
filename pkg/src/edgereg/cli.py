"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 resource cap exceeded.  Every flag falls back to an ``EIR_*`` environment
variable (``EIR_FIELD``, ``EIR_SEED``, ``EIR_JSON``, ``EIR_MAX_VERTICES``,
``EIR_JOBS``).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from . import classes
from .betti import METHODS, as_field, betti_table
from .errors import ResourceLimitError
from .evenconn import EdgeProduct, colon_graph, even_connected_pairs, find_even_connection, split_edge_token
from .graph import Graph, build_graph
from .graphio import GraphFormatError, format_edge_list, parse_edge_list_text, parse_graph6, named_graph, small_graph_catalog
from .harness import CHECKS, hunt, run_corpus
from .monomials import (Monomial, MonomialIdeal, VariableContext, edge_ideal, minimalize, parse_monomial,
                        polarized_variable_count, power)
from .ordering import EdgeOrder, ordered_generators

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    field_char: int = 2
    max_vertices: int = 16
    seed: int = 0
    output: str = "text"
    jobs: int = 1

    def __post_init__(self):
        as_field(self.field_char)
        if self.max_vertices < 1 or self.jobs < 1:
            raise ValueError("caps and job counts must be positive")


def _env(name: str, default):
    return os.environ.get("EIR_" + name, default)


def _env_flag(name: str) -> bool:
    return _env(name, "").strip().lower() in ("1", "true", "yes", "on")


def _jobs(text: str) -> int:
    if str(text).strip().lower() == "auto":
        return os.cpu_count() or 1
    return int(text)


# -- input ----------------------------------------------------------------

def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def read_ideal_listing(text: str) -> tuple[MonomialIdeal, list[Monomial]]:
    """Ideal file: one generator per line with ``*`` between factors; the listing
    order is kept alongside the minimalized ideal."""
    items = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            items.append(line)
    if not items:
        raise UsageError("ideal file has no generators")
    names: dict[str, None] = {}
    for it in items:
        for factor in it.split("*"):
            names.setdefault(factor.split("^")[0].strip())
    names.pop("1", None)
    ctx = VariableContext(tuple(names))
    listed = [parse_monomial(it, ctx) for it in items]
    return minimalize(listed, ctx), listed


def ideal_as_graph(I: MonomialIdeal) -> Graph:
    if not all(g.degree == 2 and g.is_squarefree for g in I.gens):
        raise UsageError("this command needs a squarefree quadratic ideal (an edge ideal)")
    V = I.context.names
    edges = [tuple(V[i] for i, e in enumerate(g.exps) if e) for g in I.gens]
    return build_graph(edges, V, keep_order=True)


@dataclass
class Loaded:
    graph: Graph | None
    ideal: MonomialIdeal
    listed: list[Monomial] | None = None  # generator listing order of an ideal file


def load_input(args, cfg: RunConfig, need_graph: bool = False) -> Loaded:
    sources = [x for x in (args.graph, args.graph6, args.named, args.ideal) if x]
    if len(sources) != 1:
        raise UsageError("give exactly one input: an edge-list path, --graph6, --named or --ideal")
    if args.ideal:
        I, listed = read_ideal_listing(_read(args.ideal))
        edge_like = all(g.degree == 2 and g.is_squarefree for g in I.gens)
        G = ideal_as_graph(I) if edge_like or need_graph else None
        nv = I.nvars
    else:
        if args.graph:
            G = parse_edge_list_text(_read(args.graph))
        elif args.graph6:
            G = parse_graph6(args.graph6)
        else:
            G = named_graph(args.named)
        I, listed, nv = edge_ideal(G), None, G.n
    if nv > cfg.max_vertices:
        raise ResourceLimitError(f"input has {nv} vertices; cap is {cfg.max_vertices} (--max-vertices)")
    return Loaded(G, I, listed)


# -- output -----------------------------------------------------------------

def _field_name(cfg: RunConfig) -> str:
    return "Q" if cfg.field_char == 0 else f"GF({cfg.field_char})"


def emit(cfg: RunConfig, payload: dict, text: str):
    if cfg.output == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# -- subcommands ------------------------------------------------------------

def cmd_classify(args, cfg: RunConfig) -> int:
    G = load_input(args, cfg, need_graph=True).graph
    reports = [classes.is_gap_free(G), classes.is_claw_free(G), classes.is_cricket_free(G),
               classes.complement_chordal(G)]
    top = max((G.degree(v) for v in G.vertices), default=0)
    claw_n = next(n for n in range(2, top + 2) if classes.is_n_claw_free(G, n)) if G.num_edges else 2
    dist = classes.check_max_degree_distance(G)
    payload = {"classes": {r.class_name: {"holds": r.holds, "witness": list(r.witness) if r.witness else None}
                           for r in reports},
               "min_claw_free_n": claw_n,
               "max_degree_distance": {"holds": dist.holds, "applies": dist.precondition_ok,
                                       "witness": list(dist.witness) if dist.witness else None}}
    lines = [f"{r.class_name}: {'yes' if r.holds else 'no'}" + (f" witness {' '.join(r.witness)}" if r.witness else "")
             for r in reports]
    lines.append(f"n_claw_free: smallest n = {claw_n}")
    if dist.precondition_ok:
        lines.append(f"max_degree_distance<=2: {'yes' if dist.holds else 'no'}")
    emit(cfg, payload, "\n".join(lines))
    return EXIT_OK


def cmd_reg(args, cfg: RunConfig) -> int:
    ld = load_input(args, cfg)
    I = ld.ideal
    if I.is_zero:
        raise UsageError("the ideal is zero (no edges)")
    B = betti_table(I, cfg.field_char, args.method)
    payload = {"regularity": B.regularity, "betti": B.to_dict(), "ideal": I.format()}
    emit(cfg, payload, f"reg {B.regularity} over {_field_name(cfg)}\n{B.render()}")
    return EXIT_OK


def cmd_power_reg(args, cfg: RunConfig) -> int:
    ld = load_input(args, cfg)
    if ld.ideal.is_zero:
        raise UsageError("the ideal is zero (no edges)")
    if args.s < 1:
        raise UsageError("--s must be at least 1")
    J = power(ld.ideal, args.s)
    B = betti_table(J, cfg.field_char, args.method)
    payload = {"s": args.s, "regularity": B.regularity, "linear": B.regularity == J.gens[0].degree
               and all(g.degree == J.gens[0].degree for g in J.gens),
               "generators": len(J.gens), "polarized_variables": polarized_variable_count(J),
               "betti": B.to_dict()}
    emit(cfg, payload, f"reg(I^{args.s}) {B.regularity} over {_field_name(cfg)}\n{B.render()}")
    return EXIT_OK


def cmd_colon_graph(args, cfg: RunConfig) -> int:
    G = load_input(args, cfg, need_graph=True).graph
    if not args.edges:
        raise UsageError("colon-graph needs --edges e1,e2,...")
    ee = EdgeProduct.parse(G, args.edges)
    cg = colon_graph(G, ee)
    V = G.vertices
    witnesses = []
    fresh = [p for p in even_connected_pairs(G, ee) if len(p) == 1 or not G.has_edge(*p)]
    for p in sorted(fresh, key=lambda p: sorted(V.index(x) for x in p)):
        u, v = sorted(p, key=V.index) if len(p) == 2 else (next(iter(p)),) * 2
        w = find_even_connection(G, ee, u, v)
        witnesses.append(w.format(G))
    edges = [list(e) for e in cg.base.edges()]
    payload = {"product": ee.format(), "s": ee.s, "edges": edges,
               "new_edges": [list(e) for e in cg.new_edges() if e not in cg.whiskers.items()],
               "whiskers": dict(cg.whiskers), "witnesses": witnesses}
    text = [f"# colon graph for product {ee.format()}", format_edge_list(cg.base).rstrip("\n"),
            "# whiskers"] + [f"{u} {w}" for u, w in cg.whiskers.items()] + ["# witnesses"] + witnesses
    emit(cfg, payload, "\n".join(text))
    return EXIT_OK


def cmd_order(args, cfg: RunConfig) -> int:
    ld = load_input(args, cfg, need_graph=True)
    I = ld.ideal
    if I.is_zero:
        raise UsageError("the ideal is zero (no edges)")
    if args.edge_order:
        pairs = [split_edge_token(ld.graph, tok.strip()) for tok in args.edge_order.split(",") if tok.strip()]
        L = EdgeOrder.from_pairs(I, pairs)
    elif ld.listed is not None:
        L = EdgeOrder(I, tuple(dict.fromkeys(ld.listed)))
    else:
        L = EdgeOrder.default(I)
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    og = ordered_generators(I, L, args.n)
    lines = [og.format_chain()]
    if args.expressions:
        for j, (m, ex) in enumerate(og.items, 1):
            lines.append(f"{j}: {m.format(I.context)} = {ex.format(L)} ({' '.join(str(i + 1) for i in ex.factors)})")
    emit(cfg, og.to_dict(), "\n".join(lines))
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig) -> int:
    names = sorted(CHECKS) if args.check == "all" else [args.check]
    for nm in names:
        if nm not in CHECKS:
            raise UsageError(f"unknown check {nm!r}; choose from all, {', '.join(sorted(CHECKS))}")
    if args.catalog:
        if args.catalog > min(cfg.max_vertices, 7):
            raise ResourceLimitError(f"catalog size {args.catalog} exceeds the cap")
        graphs = small_graph_catalog(args.catalog)
    else:
        graphs = [load_input(args, cfg, need_graph=True).graph]
    status = EXIT_OK
    out = []
    for nm in names:
        rep = run_corpus(nm, graphs, args.s, cfg.field_char, cfg.seed, jobs=cfg.jobs)
        out.append(rep)
        if not rep.passed:
            status = EXIT_FAIL
    if cfg.output == "json":
        payload = out[0].to_dict() if len(out) == 1 else {"reports": [r.to_dict() for r in out]}
        print(json.dumps(payload, sort_keys=True))
    else:
        for r in out:
            print(r.summary_line())
            for f in r.failures[:5]:
                print("  " + json.dumps(f, sort_keys=True))
    return status


def cmd_hunt(args, cfg: RunConfig) -> int:
    rep = hunt(args.n_max, args.count, cfg.seed, args.s, cfg.field_char)
    payload = rep.to_dict()
    text = f"tried {rep.tried}, eligible {rep.eligible}, non-linear powers found {len(rep.nonlinear)}"
    for item in rep.nonlinear:
        text += "\n  " + json.dumps(item, sort_keys=True)
    emit(cfg, payload, text)
    return EXIT_OK


# -- argument parsing -------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    def common_parser(top: bool) -> argparse.ArgumentParser:
        # flags may come before or after the subcommand; the subcommand copy only
        # overrides the top-level value when given
        c = argparse.ArgumentParser(add_help=False)

        def dflt(value):
            return value if top else argparse.SUPPRESS

        c.add_argument("--field", type=int, default=dflt(int(_env("FIELD", 2))),
                       help="field characteristic: 0 or a prime (default 2)")
        c.add_argument("--seed", type=int, default=dflt(int(_env("SEED", 0))))
        c.add_argument("--json", action="store_true", default=dflt(_env_flag("JSON")))
        c.add_argument("--max-vertices", type=int, default=dflt(int(_env("MAX_VERTICES", 16))))
        c.add_argument("--jobs", type=_jobs, default=dflt(_jobs(_env("JOBS", "1"))),
                       help="worker processes for corpus runs (integer or 'auto')")
        return c

    common = common_parser(False)

    def input_parser(positional: bool) -> argparse.ArgumentParser:
        ip = argparse.ArgumentParser(add_help=False)
        if positional:
            ip.add_argument("graph", nargs="?", help="edge-list file ('-' for stdin)")
        else:
            ip.add_argument("--graph", help="edge-list file ('-' for stdin)")
        ip.add_argument("--graph6", help="graph in graph6 encoding")
        ip.add_argument("--named", help="built-in graph such as C5, K4, P4, K1,3, triangle, cricket")
        ip.add_argument("--ideal", help="file with one monomial generator per line")
        return ip

    inputs = input_parser(True)

    p = argparse.ArgumentParser(prog="edgereg", description="Regularity of powers of edge ideals.",
                                parents=[common_parser(True)])
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("classify", parents=[common, inputs], help="graph class membership with witnesses")
    r = sub.add_parser("reg", parents=[common, inputs], help="regularity and Betti table")
    r.add_argument("--method", choices=METHODS, default="auto")
    pr = sub.add_parser("power-reg", parents=[common, inputs], help="regularity of I^s")
    pr.add_argument("--s", type=int, default=2)
    pr.add_argument("--method", choices=METHODS, default="auto")
    cg = sub.add_parser("colon-graph", parents=[common, inputs], help="graph of the polarized colon ideal")
    cg.add_argument("--edges", help="edge product, e.g. xy,wz")
    o = sub.add_parser("order", parents=[common, inputs], help="ordered minimal generators of I^n")
    o.add_argument("--n", type=int, default=2)
    o.add_argument("--edge-order", help="base edge order, e.g. ab,bc,ad,bd (default: listing or lex)")
    o.add_argument("--expressions", action="store_true", help="also list maximal expressions")
    v = sub.add_parser("verify", parents=[common, input_parser(False)], help="run a verification check")
    v.add_argument("check", help="'all' or one of: " + ", ".join(CHECKS))
    v.add_argument("--catalog", type=int, metavar="N", help="run over every graph with at most N vertices")
    v.add_argument("--s", type=int, default=2)
    h = sub.add_parser("hunt", parents=[common], help="search for gap-free graphs with non-linear powers")
    h.add_argument("--n-max", type=int, default=7)
    h.add_argument("--count", type=int, default=100)
    h.add_argument("--s", type=int, default=2)
    return p


COMMANDS = {"classify": cmd_classify, "reg": cmd_reg, "power-reg": cmd_power_reg,
            "colon-graph": cmd_colon_graph, "order": cmd_order, "verify": cmd_verify, "hunt": cmd_hunt}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = RunConfig(args.field, args.max_vertices, args.seed, "json" if args.json else "text", args.jobs)
        return COMMANDS[args.command](args, cfg)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, GraphFormatError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
