"""Isomorph-free graph enumeration by vertex augmentation.

Every graph on ``n`` vertices is some graph on ``n - 1`` vertices plus one
vertex, so growing a level by all neighbourhoods of a new vertex and
keeping one representative per isomorphism class (nauty canonical form)
enumerates every graph. Filtering each level by a property that survives
vertex deletion enumerates exactly the graphs with that property.

Graphs come out in canonical labelling, sorted by graph6 string.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator
from pathlib import Path

import pynauty

from .chromatic import chromatic_number, is_critical
from .graph import Graph, bits, popcount
from .io import emit_graph6, read_graph6_lines
from .structure import is_triangle_free, vertex_connectivity_at_least

Accept = Callable[[Graph], bool]


def _nauty(g: Graph) -> pynauty.Graph:
    return pynauty.Graph(g.n, adjacency_dict={v: list(bits(g.adj[v])) for v in range(g.n)})


def canonical(g: Graph) -> Graph:
    """``g`` relabelled into nauty's canonical order."""
    lab = pynauty.canon_label(_nauty(g))
    pos = {old: new for new, old in enumerate(lab)}
    return Graph.from_edges(g.n, [(pos[u], pos[v]) for u, v in g.edges()])


def _grow(g: Graph, nbrs: int) -> Graph:
    n = g.n
    adj = list(g.adj) + [nbrs]
    for v in bits(nbrs):
        adj[v] |= 1 << n
    return Graph(n + 1, adj)


def augment(level: Iterable[Graph], accept: Accept = lambda g: True,
            neighborhoods: Callable[[Graph], Iterable[int]] | None = None) -> list[Graph]:
    """Isomorph-free one-vertex extensions of ``level`` that pass ``accept``."""
    seen: dict[bytes, Graph] = {}
    for g in level:
        choices = neighborhoods(g) if neighborhoods else range(1 << g.n)
        for nbrs in choices:
            h = _grow(g, nbrs)
            key = pynauty.certificate(_nauty(h))
            if key in seen or not accept(h):
                continue
            seen[key] = h
    out = [canonical(h) for h in seen.values()]
    out.sort(key=emit_graph6)
    return out


def levels(max_n: int, accept: Accept = lambda g: True, *, start: list[Graph] | None = None,
           neighborhoods: Callable[[Graph], Iterable[int]] | None = None) -> Iterator[list[Graph]]:
    """Successive levels ``n = 1 .. max_n`` (or from ``start``) of accepted graphs."""
    level = start if start is not None else [g for g in [Graph(1, [0])] if accept(g)]
    yield level
    while level and level[0].n < max_n:
        level = augment(level, accept, neighborhoods)
        yield level


def all_graphs(max_n: int) -> dict[int, list[Graph]]:
    """Every graph with ``1 <= n <= max_n``, one per isomorphism class."""
    return {lv[0].n: lv for lv in levels(max_n) if lv}


def connected_graphs(max_n: int) -> list[Graph]:
    return [g for lv in all_graphs(max_n).values() for g in lv if g.is_connected()]


def independent_sets(g: Graph) -> Iterator[int]:
    """Every independent vertex set of ``g`` (including the empty set)."""
    def walk(cand: int, chosen: int):
        yield chosen
        for v in bits(cand):
            yield from walk(cand & ~g.adj[v] & ~((2 << v) - 1), chosen | (1 << v))
    yield from walk(g.vertices, 0)


def high_chromatic(max_n: int, chi: int) -> list[Graph]:
    """All graphs with ``n <= max_n`` and chromatic number exactly ``chi``.

    ``chi(G) >= n - c`` survives vertex deletion, with ``c = max_n - chi``.
    """
    slack = max_n - chi

    def accept(g: Graph) -> bool:
        return chromatic_number(g, None)[0] >= g.n - slack

    out = []
    for lv in levels(max_n, accept):
        out += [g for g in lv if chromatic_number(g, None)[0] == chi]
    return out


def critical_graphs(max_n: int, chi: int) -> list[Graph]:
    """All ``chi``-critical graphs with ``n <= max_n``.

    A ``chi``-critical graph on at most ``max_n`` vertices has chromatic
    number at least ``n - (max_n - chi)`` and each vertex misses at most
    ``max_n - chi`` others; both bounds survive vertex deletion.
    """
    slack = max_n - chi

    def accept(g: Graph) -> bool:
        if any(g.n - 1 - g.degree(v) > slack for v in range(g.n)):
            return False
        return chromatic_number(g, None)[0] >= g.n - slack

    out = []
    for lv in levels(max_n, accept):
        for g in lv:
            if g.min_degree() >= chi - 1 and is_critical(g, chi, None):
                out.append(g)
    return out


def triangle_free_min_degree(n: int, delta: int = 3, *, two_connected: bool = True,
                             base: dict[int, list[Graph]] | None = None) -> list[Graph]:
    """Triangle-free graphs on exactly ``n`` vertices with minimum degree
    at least ``delta`` (2-connected ones only, by default).

    Deleting ``j`` vertices leaves minimum degree at least ``delta - j``, so
    the search starts from all triangle-free graphs on ``n - delta``
    vertices and raises the degree floor by one per added vertex.
    """
    first = max(n - delta, 1)
    base = base if base is not None else triangle_free_levels(first)
    level = base[first]
    for size in range(first + 1, n + 1):
        floor = delta - (n - size)

        def accept(g: Graph, floor=floor) -> bool:
            return g.min_degree() >= floor

        def nbrs(g: Graph, floor=floor) -> Iterator[int]:
            needy = sum(1 << v for v in range(g.n) if g.degree(v) < floor)
            for s in independent_sets(g):
                if s & needy == needy and popcount(s) >= floor:
                    yield s

        level = augment(level, accept, nbrs)
    if two_connected:
        level = [g for g in level if vertex_connectivity_at_least(g, 2)]
    return level


def triangle_free_levels(max_n: int) -> dict[int, list[Graph]]:
    """All triangle-free graphs by vertex count."""
    return {lv[0].n: lv for lv in levels(max_n, neighborhoods=independent_sets) if lv}


def write_graph6(path: str | Path, graphs: Iterable[Graph]) -> int:
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(emit_graph6(g) + "\n")
            count += 1
    return count


def read_corpus(path: str | Path) -> list[Graph]:
    with open(path, encoding="ascii") as fh:
        out = []
        for _, _, g in read_graph6_lines(fh):
            if isinstance(g, Exception):
                raise g
            out.append(g)
        return out


FIXTURE_DIR = Path(__file__).with_name("data")


def fixture_graphs(max_n: int = 7) -> list[Graph]:
    """All graphs with ``n <= max_n <= 7`` from the shipped fixture corpus."""
    if max_n > 7:
        raise ValueError("the fixture corpus stops at seven vertices")
    return [g for g in read_corpus(FIXTURE_DIR / "graphs_n1-7.g6") if g.n <= max_n]


__all__ = [
    "all_graphs", "augment", "canonical", "connected_graphs", "critical_graphs",
    "fixture_graphs", "high_chromatic", "independent_sets", "is_triangle_free", "levels",
    "read_corpus", "triangle_free_levels", "triangle_free_min_degree", "write_graph6",
]
