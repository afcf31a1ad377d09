"""Cycle spectra: pruned search against the subset DP and networkx."""

import pytest

from cyclerun import generators as gen
from cyclerun.errors import Budget, GraphError, PreconditionError
from cyclerun.graph import Graph
from cyclerun.spectrum import (SpectrumIncomplete, cycle_at_least, cycle_lengths,
                               cycle_lengths_dp, has_cycle_of_length, longest_cycle, run_stats,
                               runs, validate_witnesses)

from conftest import nx_cycle_lengths, random_graph

# Values below were computed with networkx.simple_cycles and frozen.
KNOWN = [
    (gen.petersen(), (5, 6, 8, 9)),
    (gen.grotzsch(), (4, 5, 6, 7, 8, 9, 10, 11)),
    (gen.complete_bipartite(3, 5), (4, 6)),
    (gen.complete(4), (3, 4)),
    (gen.wheel(5), (3, 4, 5, 6)),
    (gen.g_km(3, 6), (4, 5, 6, 7, 8)),
    (gen.g_km(4, 8), (4, 5, 6, 7, 8, 9, 10)),
    (gen.path(6), ()),
]


@pytest.mark.parametrize("g, lengths", KNOWN)
def test_frozen_spectra(g, lengths):
    report = cycle_lengths(g, witnesses=True)
    assert report.lengths == lengths
    assert validate_witnesses(g, report)
    assert cycle_lengths_dp(g) == frozenset(lengths)


def test_random_graphs_against_both_oracles(rng):
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 9), rng.choice([0.2, 0.4, 0.6]))
        ours = set(cycle_lengths(g).lengths)
        assert ours == set(cycle_lengths_dp(g)) == nx_cycle_lengths(g)


def test_point_queries():
    g = gen.petersen()
    assert has_cycle_of_length(g, 7) is None
    c = has_cycle_of_length(g, 9)
    assert c is not None and len(c) == 9
    assert len(longest_cycle(g)) == 9
    assert longest_cycle(gen.path(4)) is None
    assert len(cycle_at_least(g, 8)) >= 8
    with pytest.raises(PreconditionError):
        has_cycle_of_length(g, 11)


def test_size_cap_and_budget():
    with pytest.raises(GraphError):
        cycle_lengths(gen.mycielski_graph(5))
    big = gen.mycielski_graph(3)
    with pytest.raises(PreconditionError):
        cycle_lengths(big)
    with pytest.raises(SpectrumIncomplete) as info:
        cycle_lengths(big, Budget(nodes=50), max_n=big.n)
    assert not info.value.present & info.value.undecided


def test_runs_and_stats():
    assert runs([3, 4, 5, 8, 10, 11]) == [(3, 3), (8, 1), (10, 2)]
    stats = run_stats({4, 5, 6, 7}, 3)
    assert stats.longest_run == (4, 4)
    assert stats.longest_odd_run == (5, 3)
    assert stats.odd_count == 2
    assert stats.residues == (0, 1, 2)
    assert run_stats(()).longest_run == (0, 0)


def test_cycle_free_blocks_are_skipped():
    g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)])
    assert cycle_lengths(g).lengths == (3,)
