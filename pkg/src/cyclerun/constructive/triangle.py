"""Consecutive cycles in graphs with a triangle.

Case order: a 2-separator; otherwise a 3-connected graph either without a
``K_4^-`` (exhaustive search) or with one, grown into a maximal clique ``K``
and split by ``t = |K|`` and the shape of the rest ``F``.
"""

from __future__ import annotations

from itertools import combinations

from ..errors import Budget, Finding, PreconditionError
from ..graph import Graph, lowest, mask_of, popcount, shortest_path
from ..structure import (blocks, contract, disjoint_paths, fan, find_k4_minus, has_triangle,
                         max_clique_containing, two_separators, vertex_connectivity_at_least)
from .certificate import (CaseTrace, Certificate, KComplete, run_from_cycles,
                          spectrum_certificate, vertex_list)
from .paths import admissible_paths, path_lengths


def _close(first: tuple, second: tuple) -> tuple:
    """Cycle from two paths with the same ends, ``first`` from a to b and
    ``second`` from a to b, internally disjoint."""
    return tuple(first) + tuple(reversed(second[1:-1]))


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def consecutive_cycles_triangle_case(g: Graph, k: int, budget: Budget | float | None = None
                                     ) -> tuple[Certificate | KComplete, CaseTrace]:
    """``k`` cycles of consecutive lengths, or the ``K_{k+1}`` witness.

    ``g`` is 2-connected with minimum degree at least ``k >= 2`` and has a
    triangle. A case that fails its own construction is logged as a finding
    and the exhaustive search takes over.
    """
    budget = Budget.of(budget)
    if k < 2:
        raise PreconditionError("k must be at least 2")
    if not vertex_connectivity_at_least(g, 2):
        raise PreconditionError("graph must be 2-connected")
    if g.min_degree() < k:
        raise PreconditionError(f"minimum degree below {k}")
    if has_triangle(g) is None:
        raise PreconditionError("graph has no triangle")
    trace = CaseTrace()
    if g.n == k + 1 and _is_complete(g):
        trace.log("complete", vertices=vertex_list(g.vertices))
        return KComplete(g.vertices), trace
    cert = None
    try:
        cert = _dispatch(g, k, trace, budget)
    except Finding as exc:
        trace.finding(str(exc), **exc.witness)
    except PreconditionError as exc:
        trace.finding(f"case precondition failed: {exc}")
    if cert is not None:
        why = cert.problem(g)
        if why:
            trace.finding("constructed certificate does not verify", reason=why)
            cert = None
    if cert is None:
        trace.log("exhaustive-fallback")
        cert = spectrum_certificate(g, k, budget)
        if cert is None:
            raise Finding("no k consecutive cycle lengths in a qualifying graph", k=k)
    return cert, trace


def _dispatch(g, k, trace, budget):
    seps = two_separators(g)
    if seps:
        return _separator_case(g, k, seps[0], trace, budget)
    trace.log("3-connected")
    if k == 2:
        # 3-connected gives minimum degree three, so ask for three lengths.
        if g.n == 4 and _is_complete(g):
            trace.log("complete-k4")
            return None
        found = _dispatch_3conn(g, 3, trace, budget)
        if found is None:
            return None
        return Certificate(found.cycles[:2], found.start, 2, found.strategy)
    return _dispatch_3conn(g, k, trace, budget)


def _dispatch_3conn(g, k, trace, budget):
    t1 = find_k4_minus(g)
    if t1 is None:
        trace.log("no-k4-minus")
        return spectrum_certificate(g, k, budget, "spectrum")
    v1, v2, v3, v4 = t1
    kmask = max_clique_containing(g, mask_of((v3, v4)), forbidden=mask_of((v1, v2)))
    t = popcount(kmask)
    trace.log("k4-minus", T1=[v1, v2, v3, v4], K=vertex_list(kmask), t=t)
    ladder = kmask | mask_of((v1, v2))
    if t >= k:
        trace.log("t>=k")
        paths = path_lengths(g, v1, v2, ladder, budget, lengths=set(range(2, k + 2)))
        cycles = {len(p): p for ell, p in paths.items() if 2 <= ell <= k + 1}
        return run_from_cycles(cycles, k, "triangle:clique")
    if t == k - 1:
        return _three_fan_case(g, k, ladder, trace, budget)
    rest = g.vertices & ~kmask
    comp = next(c for c in g.components(rest) if c >> v1 & 1)
    if not comp >> v2 & 1:
        raise Finding("v1 and v2 fell into different components of G - K")
    if vertex_connectivity_at_least(g.induced(comp).graph, 2):
        return _two_connected_rest(g, k, t, (v1, v2), kmask, comp, trace, budget)
    return _end_block_case(g, k, t, (v1, v2), kmask, comp, trace, budget)


def _separator_case(g, k, sep, trace, budget):
    s1, s2 = sep
    smask = mask_of(sep)
    t0 = has_triangle(g)
    comps = g.components(g.vertices & ~smask)
    tmask = mask_of(t0)
    x = next((c for c in comps if c & tmask), comps[0])
    y = g.vertices & ~smask & ~x
    trace.log("2-separator", S=[s1, s2], X=vertex_list(x), Y=vertex_list(y), T0=list(t0))
    links = disjoint_paths(g, smask, tmask, 2, x | smask)
    if links is None:
        raise Finding("no two disjoint paths from S to T0", S=[s1, s2])
    l1 = next(p for p in links if p[0] == s1)
    l2 = next(p for p in links if p[0] == s2)
    u1, u2 = l1[-1], l2[-1]
    u3 = lowest(tmask & ~mask_of((u1, u2)))
    short = l1 + tuple(reversed(l2))
    long = l1 + (u3,) + tuple(reversed(l2))
    trace.log("2-separator:links", L1=l1, L2=l2, L1p=short, L2p=long)
    fam = admissible_paths(g, s1, s2, k - 1, budget, within=y | smask)
    trace.log("2-separator:admissible", P=fam.paths, d=fam.difference)
    cycles = {}
    for p in fam.paths:
        for lp in (short, long):
            c = _close(lp, p)
            cycles.setdefault(len(c), c)
    return run_from_cycles(cycles, k, "triangle:2-separator")


def _three_fan_case(g, k, hmask, trace, budget):
    """``t = k-1``: three paths from an outside vertex into ``H = G[K + v1 v2]``."""
    outside = g.vertices & ~hmask
    if not outside:
        raise Finding("clique case with no vertex outside H")
    x = lowest(outside)
    ms = fan(g, x, hmask, 3)
    if ms is None:
        raise Finding("3-connected graph without a 3-fan", x=x)
    trace.log("t=k-1", H=vertex_list(hmask), x=x, M=ms)
    for i, j in combinations(range(3), 2):
        yi, yj = ms[i][-1], ms[j][-1]
        paths = path_lengths(g, yi, yj, hmask, budget)
        base = len(ms[i]) - 1 + len(ms[j]) - 1
        cycles = {}
        for ell, p in paths.items():
            cycles[ell + base] = p + ms[j][::-1][1:] + ms[i][1:-1]
        cert = run_from_cycles(cycles, k, "triangle:three-fan")
        if cert is not None:
            trace.log("t=k-1:pair", pair=[i, j], lengths=sorted(paths))
            return cert
    raise Finding("no fan pair gives k consecutive lengths")


def _ladder(g, a, b, hmask, lengths, budget):
    found = path_lengths(g, a, b, hmask, budget, lengths=set(lengths))
    missing = [ell for ell in lengths if ell not in found]
    if missing:
        raise Finding("clique ladder lacks a path length", ends=[a, b], missing=missing)
    return found


def _two_connected_rest(g, k, t, roots, kmask, comp, trace, budget):
    v1, v2 = roots
    trace.log("F 2-connected", F=vertex_list(comp), t=t)
    fam = admissible_paths(g, v1, v2, k - t, budget, within=comp)
    ladder = _ladder(g, v1, v2, kmask | mask_of(roots), range(1, t + 2), budget)
    trace.log("F 2-connected:paths", Q=fam.paths, d=fam.difference,
              P=[ladder[ell] for ell in sorted(ladder)])
    cycles = {}
    for q in fam.paths:
        for ell in range(1, t + 2):
            c = _close(ladder[ell], q)
            cycles.setdefault(len(c), c)
    return run_from_cycles(cycles, k, "triangle:admissible-ladder")


def _end_block_case(g, k, t, roots, kmask, comp, trace, budget):
    v1, v2 = roots
    sub = g.induced(comp)
    f = sub.graph
    if f.n < 3 or f.min_degree() < 2:
        raise Finding("rest of the graph has a vertex of degree below two", F=vertex_list(comp))
    dec = blocks(f)
    local = sub.lower_mask(mask_of(roots))
    choice = None
    for i in dec.end_blocks():
        block = dec.blocks[i]
        cut = block & dec.cut_vertices
        if popcount(cut) != 1:
            continue
        if not (block & ~cut) & local:
            choice = (block, lowest(cut))
            break
    if choice is None:
        raise Finding("no end-block avoiding v1 and v2", F=vertex_list(comp))
    bl, bcut = choice
    block = sub.lift_mask(bl)
    b = sub.labels[bcut]
    inner = block & ~(1 << b)
    attach = g.neighborhood(inner) & kmask
    trace.log("end-block", F=vertex_list(comp), B=vertex_list(block), b=b,
              N=vertex_list(attach), t=t)
    if popcount(block) < 3:
        raise Finding("end-block is a bridge", B=vertex_list(block))
    region = g.induced(block | attach)
    con = contract(region.graph, region.lower_mask(attach))
    index = {v: i for i, v in enumerate(con.labels)}
    b_local = index[region.labels.index(b)]
    fam = admissible_paths(con.graph, con.w, b_local, k - t + 1, budget)
    rs = []
    for p in fam.paths:
        inner_path = [region.labels[con.labels[v]] for v in p[1:]]
        p_i = lowest(g.adj[inner_path[0]] & attach)
        rs.append((p_i,) + tuple(inner_path))
    trace.log("end-block:contraction", w=con.w, R=rs, d=fam.difference)
    rest = comp & ~inner
    link = shortest_path(g, 1 << b, mask_of(roots), rest)
    if link is None:
        raise Finding("no path from b to v1 or v2 outside the end-block", b=b)
    e = link[-1]
    trace.log("end-block:link", L=link, end=e)
    hmask = kmask | mask_of(roots)
    cycles = {}
    for r in rs:
        ladder = _ladder(g, e, r[0], hmask, range(2, t + 2), budget)
        for ell in range(2, t + 2):
            walk = ladder[ell] + r[1:] + link[1:]
            c = walk[:-1]
            cycles.setdefault(len(c), c)
    return run_from_cycles(cycles, k, "triangle:end-block")


__all__ = ["consecutive_cycles_triangle_case"]
