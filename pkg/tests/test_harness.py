from __future__ import annotations

import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgereg import classes, harness
from edgereg.evenconn import EdgeProduct
from edgereg.graph import build_graph
from edgereg.graphio import named_graph, small_graph_catalog
from edgereg.harness import (CHECKS, SamplingBudgetExceeded, VerificationReport, graph_from_dict,
                             graph_to_dict, hunt, random_graph_in_class, run_check, run_corpus,
                             validate_report_dict, verify_linear_colons, verify_section3_bounds,
                             verify_structure_lemmas, verify_thm_5_2, verify_thm_6_16,
                             verify_thm_6_17, verify_thm_6_19)

from conftest import graphs_with_edges


def test_gap_free_bound_examples():
    rep = verify_section3_bounds(named_graph("triangle"))
    assert rep.passed and rep.checked == 1
    rep = verify_section3_bounds(named_graph("C5"))
    assert rep.passed
    rep = verify_section3_bounds(named_graph("P5"))
    assert rep.skipped == 1 and not rep.passed


def test_colon_bound_examples(xy_graph):
    assert verify_thm_5_2(build_graph([("a", "b")]), 1).passed
    assert verify_thm_5_2(xy_graph, 1).passed


def test_power_theorem_examples():
    assert verify_thm_6_16(named_graph("triangle"), 2).passed
    assert verify_thm_6_16(named_graph("K1,3"), 3).passed
    assert verify_thm_6_16(named_graph("P4"), 2).passed
    assert verify_thm_6_17(named_graph("C5"), 2).passed
    assert verify_thm_6_17(named_graph("triangle"), 2).passed
    assert verify_thm_6_19(named_graph("C5"), 2).passed
    # C5 is outside the linear-resolution case
    assert verify_thm_6_16(named_graph("C5"), 2).skipped == 1


def test_linear_colons_on_fixtures():
    for name in ("triangle", "C5", "K4", "K1,3"):
        assert not verify_linear_colons(named_graph(name), 2).failures


def test_structure_lemmas_examples(xw_graph, xy_graph):
    for G, text in ((xw_graph, "xw"), (xy_graph, "xy")):
        ee = EdgeProduct.parse(G, text)
        rep = verify_structure_lemmas(G, ee, random.Random(0))
        assert not rep.failures


def test_failures_are_recorded_and_replayable(monkeypatch):
    monkeypatch.setattr(harness, "_reg", lambda I, f: 99)
    rep = verify_thm_6_17(named_graph("C5"), 2)
    assert not rep.passed and rep.failures
    f = rep.failures[0]
    assert graph_from_dict(f["graph"]) == named_graph("C5")
    assert f["observed"] == 99


def test_zero_checked_is_not_a_pass():
    rep = VerificationReport("x")
    assert not rep.passed
    rep.checked = 1
    assert rep.passed


def test_report_json_round_trip():
    rep = run_check("gap-free-powers", named_graph("C5"), 2, 2, seed=5)
    d = json.loads(rep.to_json())
    validate_report_dict(d)
    assert d["seed"] == 5 and d["field"] == 2 and "elapsed_ms" in d
    back = VerificationReport.from_dict(d)
    assert back.to_json(timing=False) == rep.to_json(timing=False)
    with pytest.raises(ValueError):
        validate_report_dict({"theorem": "x", "checked": 1, "failures": [], "field": "two"})


def test_graph_dict_round_trip(xw_graph):
    assert graph_from_dict(graph_to_dict(xw_graph)) == xw_graph


def test_random_graph_in_class():
    G = random_graph_in_class(5, {"gap_free"}, seed=1)
    assert classes.is_gap_free(G).holds
    H = random_graph_in_class(6, {"gap_free", "cricket_free"}, seed=7)
    assert classes.is_gap_free(H).holds and classes.is_cricket_free(H).holds
    assert random_graph_in_class(6, {"gap_free", "cricket_free"}, seed=7) == H
    with pytest.raises(ValueError):
        random_graph_in_class(1, set(), seed=0)
    with pytest.raises(SamplingBudgetExceeded) as info:
        random_graph_in_class(6, {"has_edges"}, seed=0, p=0.0, max_attempts=5)
    assert info.value.attempts == 5


@settings(max_examples=20)
@given(st.integers(0, 10 ** 6), st.sampled_from(["gap_free", "cricket_free", "claw_free"]))
def test_sampler_deterministic(seed, cls):
    G = random_graph_in_class(5, {cls}, seed)
    assert G == random_graph_in_class(5, {cls}, seed)
    assert harness.CLASS_PREDICATES[cls](G)


def test_every_check_runs_on_fixtures():
    for name in CHECKS:
        rep = run_check(name, named_graph("C5"), 2, 2, seed=0)
        assert not rep.failures, name
        assert rep.theorem == name


def test_unknown_check_and_field():
    with pytest.raises(KeyError):
        run_check("nope", named_graph("C5"))
    with pytest.raises(ValueError):
        run_check("gap-free-bounds", named_graph("C5"), field_char=4)


def test_corpus_is_deterministic_and_parallel_safe():
    graphs = small_graph_catalog(4)
    a = run_corpus("witness-lemmas", graphs, 2, 2, seed=11)
    b = run_corpus("witness-lemmas", graphs, 2, 2, seed=11, jobs=2)
    assert a.to_json(timing=False) == b.to_json(timing=False)
    assert a.passed


def test_hunt_reports_counts():
    rep = hunt(5, 15, seed=2)
    assert rep.tried == 15 and rep.eligible <= rep.tried
    assert hunt(5, 15, seed=2).to_dict()["nonlinear"] == rep.nonlinear


@settings(max_examples=20)
@given(graphs_with_edges(max_n=5))
def test_power_theorems_on_random_graphs(G):
    for fn in (verify_thm_6_16, verify_thm_6_17, verify_thm_6_19):
        assert not fn(G, 2).failures
