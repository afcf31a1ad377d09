"""Corpus verification records, certificate re-checking and the hunt."""

import json

import pytest

from cyclerun import generators as gen
from cyclerun import harness
from cyclerun.constructive import find_certificate
from cyclerun.corpus import fixture_graphs
from cyclerun.harness import RunConfig, check_certificate, hunt, verify_graphs, verify_stream
from cyclerun.io import emit_graph6


def _one(theorem: str, g) -> dict:
    return verify_graphs(RunConfig(theorem=theorem), [g])[0]


def test_k7_consecutive_is_the_exception_clause():
    rec = _one("consecutive", gen.complete(7))
    assert rec["verdict"] == "exception-clause"
    assert rec["witness"]["block"] == list(range(7))


def test_h6_residues():
    rec = _one("mod-k", gen.h_k(6))
    assert rec["verdict"] == "holds" and not rec["vacuous"]
    assert rec["witness"]["residues"] == list(range(6))


def test_c5_gyarfas():
    rec = _one("gyarfas", gen.cycle(5))
    assert rec["verdict"] == "holds"
    assert (rec["chi"], rec["k"]) == (3, 2)


def test_small_k_consecutive_is_vacuous():
    rec = _one("consecutive", gen.petersen())
    assert rec["verdict"] == "holds" and rec["vacuous"]


def test_lemma52_exception_for_complete_bipartite():
    rec = _one("lemma52", gen.complete_bipartite(3, 3))
    assert rec["verdict"] == "exception-clause"
    assert _one("lemma52", gen.petersen())["verdict"] == "holds"


def test_all_selector_gives_one_record_per_graph():
    rec = _one("all", gen.h_k(6))
    assert rec["verdict"] == "holds"
    assert set(rec["witness"]) == set(harness.THEOREMS)
    assert rec["witness"]["consecutive"]["outcome"] == "certificate"


def test_stream_footer_and_malformed_lines():
    lines = [emit_graph6(gen.cycle(5)), "not graph6!", "", emit_graph6(gen.complete(4))]
    out = list(verify_stream(RunConfig(theorem="gyarfas"), lines))
    assert [r.get("id") for r in out[:-1]] == [1, 2, 4]
    assert out[1]["reason"].startswith("malformed")
    footer = out[-1]
    assert footer["summary"] and footer["graphs"] == 3 and footer["malformed"] == 1
    assert footer["verdicts"]["holds"] == 2 and footer["verdicts"]["unknown"] == 1


def test_graph_above_max_n_is_unknown():
    rec = verify_graphs(RunConfig(theorem="gyarfas", max_n=8), [gen.petersen()])[0]
    assert rec["verdict"] == "unknown" and "max-n" in rec["reason"]


def test_timing_is_opt_in():
    assert "wall_ms" not in _one("gyarfas", gen.cycle(5))
    rec = verify_graphs(RunConfig(theorem="gyarfas", timing=True), [gen.cycle(5)])[0]
    assert rec["wall_ms"] >= 0


def test_config_validation():
    with pytest.raises(ValueError):
        RunConfig(theorem="nonsense")
    with pytest.raises(ValueError):
        RunConfig(jobs=0)


def test_confirmation_downgrades_oracle_disagreement():
    verdict, witness = harness._confirm("gyarfas", gen.cycle(5), 5, {})
    assert verdict == "unknown" and "disagree" in witness["problem"]


def test_fixture_corpus_has_no_counterexamples():
    graphs = [g for g in fixture_graphs(6) if g.is_connected()]
    out = list(verify_stream(RunConfig(), [emit_graph6(g) for g in graphs]))
    footer = out[-1]
    assert footer["graphs"] == 143
    assert footer["verdicts"]["counterexample"] == 0
    assert footer["verdicts"]["unknown"] == 0


def test_parallel_output_is_identical():
    lines = [emit_graph6(g) for g in fixture_graphs(6) if g.is_connected()]
    serial = [json.dumps(r, sort_keys=True) for r in verify_stream(RunConfig(), lines)]
    parallel = [json.dumps(r, sort_keys=True) for r in verify_stream(RunConfig(jobs=3), lines)]
    assert serial == parallel


# ---------------------------------------------------------------- certificates

def test_check_certificate_accepts_and_rejects():
    g = gen.h_k(6)
    cert = find_certificate(g).certificate
    assert check_certificate(g, cert) == (True, "")
    data = cert.to_dict()

    repeated = json.loads(json.dumps(data))
    c = repeated["cycles"][1]
    c[-1] = c[0]
    assert check_certificate(g, repeated) == (False, "not simple")

    gap = json.loads(json.dumps(data))
    gap["cycles"][1] = gap["cycles"][2]
    assert check_certificate(g, gap) == (False, "run broken")

    missing = {"cycles": [[0, 1, 2]], "start": 3, "length": 1}
    broken = gen.path(3)
    ok, why = check_certificate(broken, missing)
    assert not ok and "missing edge" in why

    assert not check_certificate(g, {"cycles": []})[0]
    assert check_certificate(g, {**data, "length": data["length"] + 1})[1].startswith("cycle count")


# ---------------------------------------------------------------- hunt

def test_hunt_buckets():
    lines = [emit_graph6(gen.h_k(6)), emit_graph6(gen.cycle(5)), emit_graph6(gen.complete(7)),
             emit_graph6(gen.path(4))]
    rows = {(r["k"], r["n"]): r for r in hunt(RunConfig(), lines)}
    assert rows[(6, 9)]["min_max_run"] == 7 and rows[(6, 9)]["graphs"] == 1
    assert rows[(2, 5)]["min_max_run"] == 1
    empty = rows[(6, 7)]
    assert empty["graphs"] == 0 and empty["min_max_run"] is None and empty["witness"] is None
    assert all(not r["incomplete"] for r in rows.values())
