"""Consecutive cycles in triangle-free graphs via a BFS layer of high
chromatic number.

Pick the first BFS layer ``L_t`` whose induced graph needs ``l`` colours,
take an ``l``-critical subgraph ``H`` of it and a long cycle in ``H``. The
smallest subtree ``T'`` of the BFS tree reaching all of ``V(H)`` has root
``r'`` and height ``h``; splitting ``V(H)`` by the first child of ``r'``
gives a partition ``(A, B)``. Every A-B path of length ``j`` in ``H`` closes
through ``T'`` into a cycle of length ``2h + j``.
"""

from __future__ import annotations

from ..chromatic import chromatic_number, critical_subgraph, is_colorable
from ..errors import Budget, Finding, PreconditionError
from ..graph import Graph, popcount, two_coloring
from ..structure import bfs_layers, is_triangle_free
from .certificate import CaseTrace, Certificate, run_from_cycles, spectrum_certificate
from .dichotomy import long_cycle_or_complete_bipartite
from .paths import BipartitePartition, ab_paths_from_cycle

RELAXED_FLOOR = 4


def _layer_target(k: int, relaxed: bool) -> int:
    ell = (k + 2) // 2  # ceil((k+1)/2)
    return max(ell, RELAXED_FLOOR) if relaxed else ell


def consecutive_cycles_triangle_free(g: Graph, k: int, budget: Budget | float | None = None, *,
                                     root: int = 0, all_roots: bool = False,
                                     chi: int | None = None, relaxed: bool = False,
                                     run_length: int | None = None, odd_start: bool = False
                                     ) -> tuple[Certificate | None, CaseTrace]:
    """``k`` consecutive cycle lengths in a connected triangle-free ``g`` with
    chromatic number ``k + 1``.

    ``chi`` may be supplied when it is known by construction (large graphs);
    otherwise it is computed. In ``relaxed`` mode ``k < 6`` is accepted,
    the layer target is at least four, and when no layer reaches it the
    exact spectrum is used instead (``None`` if the graph is too large for
    that). ``run_length`` (default ``k``) and ``odd_start`` shape the run
    picked from the closed cycles.
    """
    budget = Budget.of(budget)
    if k < 6 and not relaxed:
        raise PreconditionError("k must be at least 6 (use relaxed mode below that)")
    if not is_triangle_free(g):
        raise PreconditionError("graph has a triangle")
    if not g.is_connected():
        raise PreconditionError("graph must be connected")
    if chi is None:
        chi, _ = chromatic_number(g, budget)
    if chi != k + 1:
        raise PreconditionError(f"chromatic number is {chi}, expected {k + 1}")
    want = k if run_length is None else run_length
    roots = range(g.n) if all_roots else [root]
    best: tuple[Certificate | None, CaseTrace] | None = None
    for r in roots:
        cert, trace = _from_root(g, k, r, budget, relaxed, want, odd_start)
        if best is None or (cert is not None and (best[0] is None or _size(cert) < _size(best[0]))):
            best = (cert, trace)
    cert, trace = best
    if cert is None and not g.large:
        trace.log("exhaustive-fallback")
        cert = spectrum_certificate(g, want, budget, odd_start=odd_start)
    return cert, trace


def _size(cert: Certificate) -> int:
    return sum(cert.lengths)


def _from_root(g, k, root, budget, relaxed, want, odd_start):
    trace = CaseTrace()
    ell = _layer_target(k, relaxed)
    bfs = bfs_layers(g, root)
    trace.log("bfs", root=root, layers=[popcount(layer) for layer in bfs.layers], ell=ell)
    t = None
    for i, layer in enumerate(bfs.layers):
        if i and not is_colorable(g.induced(layer).graph, ell - 1, budget):
            t = i
            break
    if t is None:
        if not relaxed:
            raise Finding("no BFS layer reaches the colour target", root=root, ell=ell)
        trace.log("no-layer", ell=ell)
        return None, trace
    layer = g.induced(bfs.layers[t])
    crit = critical_subgraph(layer.graph, ell, budget)
    h_graph = crit.graph
    h_labels = tuple(layer.labels[v] for v in crit.labels)
    trace.log("layer", t=t, H=sorted(h_labels))
    if two_coloring(h_graph) is not None:
        raise Finding("critical layer subgraph is bipartite", t=t)
    dich = long_cycle_or_complete_bipartite(h_graph, ell - 1, budget)
    if not dich.is_cycle:
        raise Finding("critical layer subgraph is complete bipartite", t=t)
    cycle = dich.cycle
    trace.log("long-cycle", C=[h_labels[v] for v in cycle])

    # minimal subtree: walk up until all branches meet
    heads = {h_labels[v] for v in range(h_graph.n)}
    height = 0
    lineage = {v: v for v in heads}  # leaf -> current ancestor
    while len(set(lineage.values())) > 1:
        below = dict(lineage)
        lineage = {v: bfs.parent[a] for v, a in lineage.items()}
        height += 1
    top = next(iter(lineage.values()))
    children = {v: below[v] for v in heads}
    first = min(children.values())
    a_side = [v for v in heads if children[v] == first]
    trace.log("subtree", r=top, h=height, A=sorted(a_side),
              B=sorted(heads - set(a_side)))
    index = {lab: i for i, lab in enumerate(h_labels)}
    a_mask = sum(1 << index[v] for v in a_side)
    b_mask = h_graph.vertices & ~a_mask
    try:
        ab = ab_paths_from_cycle(h_graph, a_mask, b_mask, cycle)
    except BipartitePartition:
        raise Finding("A-B split of a non-bipartite critical graph is a bipartition") from None
    cycles = {}
    for p in ab:
        p = [h_labels[v] for v in p]
        if children[p[0]] != first:
            p.reverse()
        up_a = bfs.tree_path(p[0])[:height]  # a .. child of r'
        up_b = bfs.tree_path(p[-1])[:height]
        c = (top,) + tuple(reversed(up_a)) + tuple(p[1:]) + tuple(up_b[1:])
        cycles[len(c)] = c
    trace.log("closed", lengths=sorted(cycles))
    cert = run_from_cycles(cycles, want, "triangle-free:bfs-layer", odd_start=odd_start)
    if cert is None:
        raise Finding("closed cycles do not contain k consecutive lengths", lengths=sorted(cycles))
    why = cert.problem(g)
    if why:
        raise Finding("pipeline certificate does not verify", reason=why)
    return cert, trace


__all__ = ["RELAXED_FLOOR", "consecutive_cycles_triangle_free"]
