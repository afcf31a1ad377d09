"""Path families, A-B paths, the long-cycle dichotomy and both consecutive-cycle constructions."""

import random

import networkx as nx
import pytest

from cyclerun import generators as gen
from cyclerun.constructive import (BipartitePartition, Certificate, KComplete,
                                   ab_paths_from_cycle, admissible_paths,
                                   consecutive_cycles_triangle_case,
                                   consecutive_cycles_triangle_free,
                                   long_cycle_or_complete_bipartite)
from cyclerun.constructive.paths import path_lengths
from cyclerun.errors import PreconditionError
from cyclerun.graph import Graph, is_path, mask_of
from cyclerun.spectrum import cycle_lengths, cycle_lengths_dp, run_stats
from cyclerun.structure import is_two_connected_rooted, rooted_min_degree

from conftest import random_graph, to_nx

TWO_K4 = Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                              (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)])


def _is_run(cert: Certificate, g: Graph) -> bool:
    return cert.verify(g) and cert.lengths == list(range(cert.start, cert.start + cert.length))


# ---------------------------------------------------------------- x-y paths

def test_path_lengths_match_networkx(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(3, 8), 0.5)
        if not g.is_connected():
            continue
        ours = path_lengths(g, 0, g.n - 1)
        theirs = {len(p) - 1 for p in nx.all_simple_paths(to_nx(g), 0, g.n - 1)}
        assert set(ours) == theirs
        assert all(is_path(g, p) and len(p) - 1 == ell for ell, p in ours.items())


@pytest.mark.parametrize("n, k, lengths", [(4, 2, [2, 3]), (5, 3, [2, 3, 4])])
def test_admissible_in_complete_graphs(n, k, lengths):
    fam = admissible_paths(gen.complete(n), 0, 1, k)
    assert fam.lengths == lengths
    assert fam.difference == 1
    assert fam.is_admissible(gen.complete(n))


def test_admissible_preconditions():
    with pytest.raises(PreconditionError):
        admissible_paths(gen.path(4), 0, 2, 1)
    with pytest.raises(PreconditionError):
        admissible_paths(gen.cycle(6), 0, 3, 2)


def test_admissible_within_region():
    g = gen.disjoint_union(gen.complete(5), gen.cycle(3))
    fam = admissible_paths(g, 0, 1, 3, within=mask_of(range(5)))
    assert fam.lengths == [2, 3, 4]


# ---------------------------------------------------------------- A-B paths

def test_complete_bipartite_bipartition_is_rejected():
    g = gen.complete_bipartite(3, 3)
    with pytest.raises(BipartitePartition):
        ab_paths_from_cycle(g, 0b000111, 0b111000, (0, 3, 1, 4))


def test_ab_paths_from_triangle():
    paths = ab_paths_from_cycle(gen.complete(4), 0b0001, 0b1110, (1, 2, 3))
    assert [len(p) - 1 for p in paths] == [1, 2]


def test_ab_paths_from_four_cycle():
    g = gen.complete(4)
    paths = ab_paths_from_cycle(g, 0b0011, 0b1100, (0, 1, 2, 3))
    assert [len(p) - 1 for p in paths] == [1, 2, 3]
    assert all(is_path(g, p) for p in paths)


def _min_degree_three(rng: random.Random) -> Graph:
    while True:
        g = random_graph(rng, rng.randint(4, 10), rng.choice([0.45, 0.6, 0.8]))
        if g.is_connected() and g.min_degree() >= 3:
            return g


def test_ab_paths_random_property(rng):
    """Every proper partition and cycle yields paths of all lengths, unless
    the partition is a bipartition."""
    bipartitions = 0
    for _ in range(1000):
        g = _min_degree_three(rng)
        witnesses = cycle_lengths(g, witnesses=True).witnesses
        cycle = witnesses[rng.choice(sorted(witnesses))]
        a = rng.randint(1, (1 << g.n) - 2)
        b = g.vertices & ~a
        crossing = all((a >> u & 1) != (a >> v & 1) for u, v in g.edges())
        if crossing:
            bipartitions += 1
            with pytest.raises(BipartitePartition):
                ab_paths_from_cycle(g, a, b, cycle)
            continue
        paths = ab_paths_from_cycle(g, a, b, cycle)
        assert [len(p) - 1 for p in paths] == list(range(1, len(cycle)))
        for p in paths:
            assert is_path(g, p)
            assert (a >> p[0] & 1) != (a >> p[-1] & 1)
    assert bipartitions < 1000


def test_ab_paths_bipartite_graph_nonbipartition():
    g = gen.complete_bipartite(3, 4)
    a = mask_of([0, 3])
    paths = ab_paths_from_cycle(g, a, g.vertices & ~a, (0, 3, 1, 4, 2, 5))
    assert [len(p) - 1 for p in paths] == [1, 2, 3, 4, 5]


# ---------------------------------------------------------------- dichotomy

def test_dichotomy_complete_bipartite_branch():
    res = long_cycle_or_complete_bipartite(gen.complete_bipartite(3, 7), 3)
    assert not res.is_cycle
    assert res.n_large == 7
    assert set(res.to_dict()) == {"small", "large"}


def test_dichotomy_cycle_branch():
    res = long_cycle_or_complete_bipartite(gen.g_km(3, 8), 3)
    assert res.is_cycle and len(res.cycle) == 8


def test_dichotomy_petersen():
    res = long_cycle_or_complete_bipartite(gen.petersen(), 3)
    assert res.is_cycle and len(res.cycle) >= 8


def test_dichotomy_preconditions():
    with pytest.raises(PreconditionError):
        long_cycle_or_complete_bipartite(gen.complete(5), 3)
    with pytest.raises(PreconditionError):
        long_cycle_or_complete_bipartite(gen.cycle(8), 3)


# ---------------------------------------------------------------- triangle case

def test_triangle_case_complete_graph():
    found, trace = consecutive_cycles_triangle_case(gen.complete(7), 6)
    assert isinstance(found, KComplete)
    assert "complete" in trace.cases


def test_triangle_case_h6():
    g = gen.h_k(6)
    cert, _ = consecutive_cycles_triangle_case(g, 6)
    assert cert.length == 6 and _is_run(cert, g)
    assert 3 <= cert.start and cert.start + 5 <= 9


def test_triangle_case_two_k4():
    cert, trace = consecutive_cycles_triangle_case(TWO_K4, 3)
    assert cert.length == 3 and _is_run(cert, TWO_K4)
    assert set(cert.lengths) <= {3, 4, 5, 6}
    assert "2-separator" in trace.cases


def test_triangle_case_needs_a_triangle_free_error():
    with pytest.raises(PreconditionError):
        consecutive_cycles_triangle_case(gen.cycle(5), 3)


def test_triangle_case_random_graphs(rng):
    seen = set()
    done = 0
    while done < 150:
        g = random_graph(rng, rng.randint(5, 10), rng.choice([0.5, 0.7, 0.9]))
        k = g.min_degree()
        if k < 2 or not g.is_connected() or not cycle_lengths(g).lengths:
            continue
        try:
            found, trace = consecutive_cycles_triangle_case(g, k)
        except PreconditionError:
            continue
        done += 1
        seen |= set(trace.cases)
        assert not trace.findings
        if isinstance(found, KComplete):
            assert g.m == g.n * (g.n - 1) // 2
        else:
            assert found.length == k and _is_run(found, g)
            assert set(found.lengths) <= set(cycle_lengths_dp(g))
    assert {"2-separator", "3-connected"} <= seen


# ---------------------------------------------------------------- triangle-free pipeline

def test_pipeline_on_the_95_vertex_mycielski_graph():
    g = gen.mycielski_graph(5)
    cert, trace = consecutive_cycles_triangle_free(g, 6, chi=7)
    assert cert.length >= 6 and _is_run(cert, g)
    assert "long-cycle" in trace.cases


def test_pipeline_rejects_small_k():
    with pytest.raises(PreconditionError):
        consecutive_cycles_triangle_free(gen.cycle(5), 6)
    with pytest.raises(PreconditionError):
        consecutive_cycles_triangle_free(gen.cycle(5), 2)


def test_relaxed_mode_falls_back_to_the_spectrum():
    g = gen.grotzsch()
    cert, trace = consecutive_cycles_triangle_free(g, 3, relaxed=True)
    assert "no-layer" in trace.cases and "exhaustive-fallback" in trace.cases
    assert cert.length == 3 and _is_run(cert, g)


def test_relaxed_mode_on_a_layered_graph():
    g = gen.mycielski_graph(4)
    cert, trace = consecutive_cycles_triangle_free(g, 5, chi=6, relaxed=True)
    assert "layer" in trace.cases
    assert _is_run(cert, g) and cert.length == 5


def test_rooted_helpers_agree_with_networkx(rng):
    for _ in range(100):
        g = random_graph(rng, rng.randint(4, 9), 0.5)
        h = to_nx(g)
        h.add_edge(0, 1)
        expect = nx.is_biconnected(h) and g.n >= 3
        assert is_two_connected_rooted(g, 0, 1) == expect
        degrees = [g.degree(v) for v in range(2, g.n)]
        assert rooted_min_degree(g, 0, 1) == min(degrees)


def test_run_stats_of_certificate_lengths():
    cert, _ = consecutive_cycles_triangle_case(gen.h_k(4), 4)
    assert run_stats(cert.lengths).longest_run[1] >= 4
