"""Named graph families."""

import networkx as nx
import pytest

from cyclerun import generators as gen
from cyclerun.chromatic import chromatic_number
from cyclerun.errors import GraphError
from cyclerun.structure import is_triangle_free, vertex_connectivity_at_least

from conftest import to_nx


def test_petersen_is_the_petersen_graph():
    assert nx.is_isomorphic(to_nx(gen.petersen()), nx.petersen_graph())


def test_grotzsch_matches_networkx_mycielski():
    assert nx.is_isomorphic(to_nx(gen.grotzsch()), nx.mycielski_graph(4))
    for steps in range(4):
        assert nx.is_isomorphic(to_nx(gen.mycielski_graph(steps)), nx.mycielski_graph(steps + 2))


def test_mycielski_sizes_and_large_flag():
    assert [gen.mycielski_graph(s).n for s in range(1, 6)] == [5, 11, 23, 47, 95]
    big = gen.mycielski_graph(5)
    assert big.large and big.m == 755
    assert is_triangle_free(big)


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_h_k_shape(k):
    g = gen.h_k(k)
    assert g.n == k + 3
    assert chromatic_number(g)[0] == k + 1


@pytest.mark.parametrize("k, m", [(3, 6), (3, 8), (4, 8), (4, 9)])
def test_g_km_shape(k, m):
    g = gen.g_km(k, m)
    assert g.n == k + m + 1
    assert g.min_degree() >= k
    assert is_triangle_free(g)
    assert vertex_connectivity_at_least(g, 2)


def test_g_km_split_rules():
    assert gen.g_km(3, 7, split=(3, 4)).n == 11
    with pytest.raises(GraphError):
        gen.g_km(3, 7, split=(2, 5))
    with pytest.raises(GraphError):
        gen.g_km(3, 5)


def test_wheel_and_union():
    w = gen.wheel(5)
    assert w.degree(0) == 5 and w.m == 10
    u = gen.disjoint_union(gen.cycle(3), gen.cycle(4))
    assert (u.n, u.m, len(u.components())) == (7, 7, 2)


def test_families_table_is_callable():
    for name, (fn, argc) in gen.FAMILIES.items():
        args = {0: (), 1: (5,), 2: (3, 6)}[argc]
        assert fn(*args).n > 0, name
