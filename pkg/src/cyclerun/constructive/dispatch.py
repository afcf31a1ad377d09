"""Top-level certificate search for a graph of known or computable chromatic number."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..chromatic import chromatic_number, critical_subgraph
from ..errors import Budget, BudgetExceeded, Finding, PreconditionError
from ..graph import Graph, bits, lowest, mask_of, popcount, shortest_path
from ..layers import ConflictWitness, attempt_layer_coloring
from ..spectrum import cycle_lengths, run_stats
from ..structure import blocks, is_triangle_free
from .certificate import (CaseTrace, Certificate, KComplete, KCompleteBlock, run_from_cycles,
                          vertex_list)
from .triangle import consecutive_cycles_triangle_case
from .triangle_free import consecutive_cycles_triangle_free


@dataclass
class Dispatch:
    """Outcome of :func:`find_certificate`.

    ``outcome`` is ``"certificate"``, ``"complete-block"`` or ``"unknown"``.
    ``odd_start`` holds cycles of consecutive lengths beginning at an odd
    length, when one was found.
    """

    k: int | None
    outcome: str
    certificate: Certificate | None = None
    block: KCompleteBlock | None = None
    odd_start: Certificate | None = None
    trace: CaseTrace = field(default_factory=CaseTrace)
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "k": self.k, "outcome": self.outcome, "reason": self.reason,
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "block": self.block.to_dict() if self.block else None,
            "odd_start": self.odd_start.to_dict() if self.odd_start else None,
            "trace": self.trace.to_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def longest_run_certificate(g: Graph, budget, odd_start: bool = False,
                            strategy: str = "spectrum") -> Certificate | None:
    """Certificate for the longest run in the exact spectrum (smallest start)."""
    report = cycle_lengths(g, budget, witnesses=True, max_n=max(g.n, 16))
    stats = run_stats(report)
    start, size = stats.longest_odd_run if odd_start else stats.longest_run
    if size == 0:
        return None
    return run_from_cycles(report.witnesses, size, strategy, odd_start=odd_start)


def find_certificate(g: Graph, budget: Budget | float | None = None, *, root: int = 0,
                     all_roots: bool = False, chi: int | None = None) -> Dispatch:
    """Cycles of ``k = chi(g) - 1`` consecutive lengths, or a ``K_{k+1}`` block.

    Also looks for consecutive lengths starting at an odd length (``k-1`` of
    them where the construction reaches that far). For triangle-free graphs
    with ``k < 6`` only the exact spectrum is consulted, so the certificate
    is the longest run present and may be shorter than ``k``.
    """
    budget = Budget.of(budget)
    trace = CaseTrace()
    try:
        if chi is None:
            chi, _ = chromatic_number(g, budget)
    except BudgetExceeded as exc:
        return Dispatch(None, "unknown", trace=trace, reason=f"chromatic number: {exc}")
    k = chi - 1
    if k < 2:
        raise PreconditionError(f"chromatic number {chi} is below 3; nothing to certify")
    try:
        return _dispatch(g, k, budget, root, all_roots, trace)
    except BudgetExceeded as exc:
        return Dispatch(k, "unknown", trace=trace, reason=f"budget: {exc}")
    except Finding as exc:
        trace.finding(str(exc), **exc.witness)
        return Dispatch(k, "unknown", trace=trace, reason=f"finding: {exc}")


def _dispatch(g, k, budget, root, all_roots, trace):
    crit = critical_subgraph(g, k + 1, budget)
    gp = crit.graph
    trace.log("critical", vertices=list(crit.labels))
    sub_root = crit.labels.index(root) if root in crit.labels else 0
    cert = block = None
    if is_triangle_free(gp):
        if k >= 6:
            found, sub = consecutive_cycles_triangle_free(gp, k, budget, root=sub_root,
                                                          all_roots=all_roots, chi=k + 1)
            trace.extend(sub, "triangle-free:")
            cert = found.lifted(crit.labels)
        else:
            trace.log("exhaustive", reason="triangle-free below the pipeline range")
            cert = longest_run_certificate(g, budget)
    else:
        found, sub = consecutive_cycles_triangle_case(gp, k, budget)
        trace.extend(sub, "triangle:")
        if isinstance(found, KComplete):
            cert, block = _complete_block(g, mask_of(crit.labels), k, trace)
        else:
            cert = found.lifted(crit.labels)
    if cert is not None:
        why = cert.problem(g)
        if why:
            raise Finding("dispatcher certificate does not verify", reason=why)
    odd = _odd_start(g, gp, crit, k, cert, block, budget, sub_root, trace)
    if block is not None:
        return Dispatch(k, "complete-block", block=block, odd_start=odd, trace=trace)
    if cert is None:
        return Dispatch(k, "unknown", odd_start=odd, trace=trace, reason="no cycles found")
    return Dispatch(k, "certificate", certificate=cert, odd_start=odd, trace=trace)


def _complete_block(g, clique, k, trace):
    """``G'`` is ``K_{k+1}``: either its block in ``g`` is exactly that clique,
    or a vertex of the block outside it yields ``k`` consecutive cycles."""
    comp = next(c for c in g.components() if c & clique == clique)
    sub = g.induced(comp)
    local = sub.lower_mask(clique)
    dec = blocks(sub.graph)
    home = sub.lift_mask(next(b for b in dec.blocks if b & local == local))
    if home == clique:
        trace.log("complete-block", B=vertex_list(home))
        return None, KCompleteBlock(home)
    x = lowest(home & ~clique)
    region = next(c for c in g.components(home & ~clique) if c >> x & 1)
    attach = g.neighborhood(region) & clique
    if popcount(attach) < 2:
        raise Finding("outside part of the block attaches to fewer than two clique vertices")
    p = lowest(attach)
    q = lowest(attach & ~(1 << p))
    pp = lowest(g.adj[p] & region)
    qq = lowest(g.adj[q] & region)
    link = (p,) + shortest_path(g, 1 << pp, 1 << qq, region) + (q,)
    others = [v for v in bits(clique) if v not in (p, q)]
    cycles = {}
    for j in range(k):
        c = link + tuple(others[:j])
        cycles[len(c)] = c
    trace.log("block-extension", B=vertex_list(home), x=x, P=link)
    return run_from_cycles(cycles, k, "complete-block-extension"), None


def _odd_start(g, gp, crit, k, cert, block, budget, sub_root, trace):
    if block is not None:
        members = list(bits(block.vertices))
        cycles = {j: tuple(members[:j]) for j in range(3, k + 2)}
        return run_from_cycles(cycles, k - 1, "complete-block", odd_start=True)
    if cert is not None and cert.length >= k and k >= 5:
        return cert.odd_start()
    if k == 2:
        cyc = crit.labels  # a 3-critical graph is an odd cycle
        order = _cycle_order(gp)
        return Certificate((tuple(cyc[v] for v in order),), len(order), 1, "odd-cycle")
    if k == 5:
        found = _odd_start_k5(gp, crit, budget, sub_root, trace)
        if found is not None:
            return found
    trace.log("odd-start:exhaustive")
    return longest_run_certificate(g, budget, odd_start=True)


def _cycle_order(cyc: Graph) -> list[int]:
    order = [0, lowest(cyc.adj[0])]
    while len(order) < cyc.n:
        order.append(lowest(cyc.adj[order[-1]] & ~(1 << order[-2])))
    return order


def _odd_start_k5(gp, crit, budget, root, trace):
    """Six-chromatic case: triangle machine output already covers graphs
    with a triangle; triangle-free graphs go through the BFS-layer pipeline
    with layer target four, else the five-colour layer scheme."""
    if not is_triangle_free(gp):
        return None
    found, sub = consecutive_cycles_triangle_free(gp, 5, budget, root=root, chi=6,
                                                  relaxed=True, run_length=4, odd_start=True)
    layered = "no-layer" not in sub.cases
    trace.extend(sub, "odd-start:")
    if layered and found is not None:
        return found.lifted(crit.labels)
    outcome = attempt_layer_coloring(gp, root, budget)
    if isinstance(outcome, ConflictWitness):
        trace.log("odd-start:conflict", witness=outcome.to_dict())
    else:
        raise Finding("five-colour layer scheme coloured a six-chromatic graph")
    return found.lifted(crit.labels) if found is not None else None


__all__ = ["Dispatch", "find_certificate", "longest_run_certificate"]
