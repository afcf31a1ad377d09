"""Acceptance criteria 1-11, one printed PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see each line as it is
produced; the lines are also repeated in the terminal summary.
"""

from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

import networkx as nx

from cyclerun import generators as gen
from cyclerun.chromatic import chromatic_number, chromatic_number_dp, is_critical
from cyclerun.constructive import (admissible_paths, consecutive_cycles_triangle_free,
                                   find_certificate, long_cycle_or_complete_bipartite)
from cyclerun.corpus import (all_graphs, canonical, critical_graphs, fixture_graphs,
                             high_chromatic, triangle_free_levels, triangle_free_min_degree)
from cyclerun.errors import Finding
from cyclerun.graph import Graph, bits, cycle_problem
from cyclerun.harness import RunConfig, check_certificate, verify_stream
from cyclerun.io import emit_graph6, parse_graph6
from cyclerun.spectrum import cycle_lengths, cycle_lengths_dp, longest_cycle
from cyclerun.structure import (is_triangle_free, is_two_connected_rooted, rooted_min_degree,
                                vertex_connectivity_at_least)

from conftest import ACCEPTANCE_LINES, random_graph, to_nx

JOBS = max(2, min(8, os.cpu_count() or 1))


def report(number: int, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def _pool_map(fn, items: list, jobs: int) -> list:
    if jobs == 1:
        return list(map(fn, items))
    with ProcessPoolExecutor(jobs) as pool:
        return list(pool.map(fn, items, chunksize=8))


# ---------------------------------------------------------------- corpora

@lru_cache(maxsize=None)
def connected_corpus() -> tuple[str, ...]:
    """graph6 of every connected graph with n <= 8: shipped fixture up to 7,
    order 8 from the enumerator."""
    small = [g for g in fixture_graphs(7) if g.is_connected()]
    eight = [g for g in all_graphs(8)[8] if g.is_connected()]
    return tuple(emit_graph6(g) for g in small + eight)


@lru_cache(maxsize=None)
def chi7_corpus() -> tuple[str, ...]:
    return tuple(emit_graph6(g) for g in high_chromatic(9, 7))


@lru_cache(maxsize=None)
def critical7_corpus() -> tuple[str, ...]:
    found = [emit_graph6(g) for g in critical_graphs(10, 7) if g.m != g.n * (g.n - 1) // 2]
    h6 = emit_graph6(canonical(gen.h_k(6)))
    return tuple(found if h6 in found else found + [h6])


@lru_cache(maxsize=None)
def dichotomy_corpus() -> tuple[str, ...]:
    base = triangle_free_levels(8)
    out = []
    for n in range(6, 12):
        out += triangle_free_min_degree(n, base=base)
    return tuple(emit_graph6(g) for g in out)


# ---------------------------------------------------------------- runs behind 3-7

@lru_cache(maxsize=None)
def theorem_run(theorem: str, corpus: str, jobs: int) -> str:
    lines = {"connected": connected_corpus, "critical7": critical7_corpus}[corpus]()
    config = RunConfig(theorem=theorem, jobs=jobs, budget_ms=60_000)
    return "".join(json.dumps(r, sort_keys=True) + "\n" for r in verify_stream(config, lines))


def _certify(text: str) -> str:
    g = parse_graph6(text)
    d = find_certificate(g, 10.0, chi=None)
    row = {"graph6": text, "outcome": d.outcome, "reason": d.reason}
    if d.certificate is not None:
        ok, why = check_certificate(g, d.certificate)
        row.update(certificate=d.certificate.to_dict(), valid=ok, why=why)
    if d.block is not None:
        members = list(bits(d.block.vertices))
        row.update(block=members, valid=_is_k7_block(g, d.block.vertices))
    return json.dumps(row, sort_keys=True)


def _is_k7_block(g: Graph, members: int) -> bool:
    """Independent check: the 7 vertices form a clique that is a whole block."""
    h = to_nx(g)
    vs = list(bits(members))
    if len(vs) != 7 or any(not h.has_edge(u, v) for u in vs for v in vs if u < v):
        return False
    return any(set(vs) == set(c) for c in nx.biconnected_components(h))


@lru_cache(maxsize=None)
def certificate_run(jobs: int) -> str:
    return "".join(r + "\n" for r in _pool_map(_certify, list(chi7_corpus()), jobs))


def _dichotomy(text: str) -> str:
    g = parse_graph6(text)
    k = g.min_degree()
    row = {"graph6": text, "k": k}
    try:
        res = long_cycle_or_complete_bipartite(g, k)
    except Finding as exc:
        row.update(finding=str(exc), verified=False)
        return json.dumps(row, sort_keys=True)
    row.update(res.to_dict())
    if res.is_cycle:
        row["verified"] = cycle_problem(g, res.cycle) is None and len(res.cycle) >= 2 * k + 2
    else:
        h = to_nx(g)
        small, large = list(bits(res.small)), list(bits(res.large))
        row["verified"] = (len(small) == k and nx.is_bipartite(h)
                           and g.m == len(small) * len(large)
                           and all(h.has_edge(a, b) for a in small for b in large))
    return json.dumps(row, sort_keys=True)


@lru_cache(maxsize=None)
def dichotomy_run(jobs: int) -> str:
    return "".join(r + "\n" for r in _pool_map(_dichotomy, list(dichotomy_corpus()), jobs))


def _footer(output: str) -> dict:
    return json.loads(output.splitlines()[-1])


# ---------------------------------------------------------------- criteria

def test_criterion_1_h_k_spectrum():
    start = time.perf_counter()
    bad = []
    for k in range(3, 9):
        g = gen.h_k(k)
        if cycle_lengths(g).lengths != tuple(range(3, k + 4)):
            bad.append((k, "spectrum"))
        if chromatic_number(g)[0] != k + 1 or chromatic_number_dp(g) != k + 1:
            bad.append((k, "chi"))
        if not is_critical(g, k + 1):
            bad.append((k, "critical"))
    elapsed = time.perf_counter() - start
    report(1, not bad and elapsed < 30,
           f"H_k for k=3..8: spectrum {{3..k+3}}, chi=k+1, critical; "
           f"failures={bad}, {elapsed:.1f}s (limit 30s)")


def test_criterion_2_g_km_tightness():
    start = time.perf_counter()
    rows = []
    for k in (3, 4):
        g = gen.g_km(k, 2 * k)
        longest = len(longest_cycle(g))
        rows.append((k, longest, max(cycle_lengths_dp(g)), is_triangle_free(g),
                     vertex_connectivity_at_least(g, 2)))
    elapsed = time.perf_counter() - start
    ok = all(lc == dp == 2 * k + 2 and tf and c2 for k, lc, dp, tf, c2 in rows) and elapsed < 30
    report(2, ok, f"G_(k,2k) longest cycle = 2k+2 for k=3,4 "
                  f"(k, longest, dp, triangle-free, 2-connected) = {rows}, {elapsed:.1f}s")


def test_criterion_3_odd_start_exhaustive():
    start = time.perf_counter()
    foot = _footer(theorem_run("odd-start", "connected", JOBS))
    elapsed = time.perf_counter() - start
    v = foot["verdicts"]
    ok = (foot["graphs"] == len(connected_corpus()) and v["counterexample"] == 0
          and v["unknown"] == 0 and elapsed < 600)
    report(3, ok, f"odd-start run >= k-1 on {foot['graphs']} connected graphs n<=8: "
                  f"verdicts={v}, vacuous={foot['vacuous']}, {elapsed:.1f}s with {JOBS} workers")


def test_criterion_4_odd_lengths_exhaustive():
    foot = _footer(theorem_run("gyarfas", "connected", JOBS))
    v = foot["verdicts"]
    ok = foot["graphs"] == len(connected_corpus()) and v["counterexample"] == 0 and v["unknown"] == 0
    report(4, ok, f">= floor(k/2) odd lengths on {foot['graphs']} connected graphs n<=8: "
                  f"verdicts={v}")


def test_criterion_5_chi7_certificates():
    start = time.perf_counter()
    rows = [json.loads(r) for r in certificate_run(JOBS).splitlines()]
    elapsed = time.perf_counter() - start
    outcomes = {o: sum(r["outcome"] == o for r in rows)
                for o in ("certificate", "complete-block", "unknown")}
    good = 0
    for r in rows:
        if r["outcome"] == "certificate":
            cert = r["certificate"]
            good += r["valid"] and cert["length"] >= 6
        elif r["outcome"] == "complete-block":
            good += r["valid"]
    ok = len(rows) == len(chi7_corpus()) > 0 and good == len(rows) and outcomes["unknown"] == 0
    report(5, ok, f"{len(rows)} graphs with chi=7, n<=9: outcomes={outcomes}, "
                  f"verified={good}, {elapsed:.1f}s")


def test_criterion_6_residues_mod_6():
    out = theorem_run("mod-k", "critical7", JOBS)
    records = [json.loads(ln) for ln in out.splitlines()[:-1]]
    foot = _footer(out)
    full = [r for r in records if r["verdict"] == "holds" and not r["vacuous"]
            and r["witness"]["residues"] == list(range(6))]
    ok = (foot["verdicts"]["counterexample"] == 0 and len(full) == len(records)
          and len(records) == len(critical7_corpus()))
    sizes = [(r["n"], r["m"]) for r in records]
    report(6, ok, f"7-critical non-complete graphs n<=10 plus H_6 (deduplicated) (n, m) = {sizes}: "
                  f"all residues mod 6 in {len(full)}/{len(records)}")


def test_criterion_7_dichotomy_exhaustive():
    start = time.perf_counter()
    rows = [json.loads(r) for r in dichotomy_run(JOBS).splitlines()]
    elapsed = time.perf_counter() - start
    findings = sum("finding" in r for r in rows)
    verified = sum(r["verified"] for r in rows)
    branches = sum("cycle" in r for r in rows), sum("small" in r for r in rows)
    ok = findings == 0 and verified == len(rows) == len(dichotomy_corpus()) > 0
    report(7, ok, f"{len(rows)} triangle-free 2-connected graphs with delta>=3, n<=11: "
                  f"findings={findings}, verified={verified}, "
                  f"(cycle, K_k,n) branches={branches}, {elapsed:.1f}s")


def _rooted_samples(count: int, k: int, rng: random.Random) -> list[tuple[Graph, int, int]]:
    out = []
    while len(out) < count:
        g = random_graph(rng, rng.randint(k + 3, 10), rng.choice([0.5, 0.65, 0.8]))
        x, y = rng.sample(range(g.n), 2)
        if is_two_connected_rooted(g, x, y) and rooted_min_degree(g, x, y) >= k + 1:
            out.append((g, x, y))
    return out


def test_criterion_8_admissible_paths():
    rng = random.Random(8)
    failures = []
    total = 0
    for k in (2, 3):
        for g, x, y in _rooted_samples(250, k, rng):
            total += 1
            try:
                fam = admissible_paths(g, x, y, k)
            except Finding as exc:
                failures.append((emit_graph6(g), x, y, k, str(exc)))
                continue
            h = to_nx(g)
            simple = all(nx.is_simple_path(h, list(p)) for p in fam.paths)
            if not (simple and fam.is_admissible(g) and len(fam.paths) == k):
                failures.append((emit_graph6(g), x, y, k, "invalid family"))
    report(8, total == 500 and not failures,
           f"admissible_paths on {total} random 2-connected rooted graphs (k=2,3): "
           f"failures={len(failures)}")


def test_criterion_9_oracle_equivalence():
    rng = random.Random(9)
    mismatches = 0
    for _ in range(1000):
        g = random_graph(rng, rng.randint(1, 10), rng.choice([0.15, 0.3, 0.5, 0.7]))
        if set(cycle_lengths(g).lengths) != cycle_lengths_dp(g):
            mismatches += 1
    report(9, mismatches == 0, f"enumeration vs DP spectrum on 1000 random graphs n<=10: "
                               f"mismatches={mismatches}")


def test_criterion_10_pipeline_end_to_end():
    start = time.perf_counter()
    g = gen.mycielski_graph(5)
    assert g.n == 95 and is_triangle_free(g)
    cert, _ = consecutive_cycles_triangle_free(g, 6, 600.0, chi=7)
    elapsed = time.perf_counter() - start
    ok, why = check_certificate(g, cert)
    lengths = cert.lengths
    ok = ok and cert.length >= 6 and lengths == list(range(lengths[0], lengths[0] + cert.length))
    report(10, ok and elapsed < 600,
           f"95-vertex Mycielski graph: cycle lengths {lengths}, re-verified={ok} {why}, "
           f"{elapsed:.2f}s")


def test_criterion_11_determinism():
    pairs = {
        3: (theorem_run("odd-start", "connected", JOBS), theorem_run("odd-start", "connected", 1)),
        4: (theorem_run("gyarfas", "connected", JOBS), theorem_run("gyarfas", "connected", 1)),
        5: (certificate_run(JOBS), certificate_run(1)),
        6: (theorem_run("mod-k", "critical7", JOBS), theorem_run("mod-k", "critical7", 1)),
        7: (dichotomy_run(JOBS), dichotomy_run(1)),
    }
    same = {n: a == b for n, (a, b) in pairs.items()}
    report(11, all(same.values()),
           f"criteria 3-7 byte-identical at {JOBS} workers vs 1 worker: {same}")
