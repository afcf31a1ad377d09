"""Exact chromatic number, criticality and critical subgraphs.

The search is DSATUR-style backtracking over bitset rows: colour the vertex
with the most distinctly coloured neighbours first, only ever open the next
unused colour, and let :class:`~cyclerun.errors.Budget` cut it off.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import Budget, BudgetExceeded, PreconditionError
from .graph import Graph, Subgraph, bits, lowest, popcount


@dataclass(frozen=True)
class Coloring:
    """Colour of each vertex (``colors[v]``), colours counted from 1."""

    colors: tuple[int, ...]

    @property
    def palette(self) -> int:
        return len(set(self.colors))

    def is_proper(self, g: Graph) -> bool:
        if len(self.colors) != g.n or any(c < 1 for c in self.colors):
            return False
        return all(self.colors[u] != self.colors[v] for u, v in g.edges())

    def to_json(self) -> str:
        return json.dumps({str(v): c for v, c in enumerate(self.colors)})


def _greedy_clique(g: Graph, vs: int) -> int:
    best = 0
    for start in bits(vs):
        clique = 1 << start
        cand = g.adj[start] & vs
        while cand:
            v = max(bits(cand), key=lambda u: (popcount(g.adj[u] & cand), -u))
            clique |= 1 << v
            cand &= g.adj[v]
        if popcount(clique) > popcount(best):
            best = clique
    return best


def _dsatur_greedy(g: Graph) -> list[int]:
    n = g.n
    color = [0] * n
    used = [0] * n
    for _ in range(n):
        v = max((u for u in range(n) if not color[u]),
                key=lambda u: (popcount(used[u]), popcount(g.adj[u]), -u))
        c = 1
        while used[v] >> c & 1:
            c += 1
        color[v] = c
        for u in bits(g.adj[v]):
            used[u] |= 1 << c
    return color


def color_with(g: Graph, k: int, palettes: list[int] | None = None,
               budget: Budget | float | None = None, precolored: int = 0) -> list[int] | None:
    """Find a proper colouring with colours ``1..k``, or ``None`` if none exists.

    ``palettes[v]`` optionally restricts vertex ``v`` to the colours whose
    bits are set (bit ``c`` for colour ``c``). Without palettes, colour
    symmetry is broken by opening at most one new colour per branch, and the
    vertices of ``precolored`` (a clique) are fixed to colours ``1, 2, ...``.
    """
    budget = Budget.of(budget)
    n = g.n
    full = ((1 << (k + 1)) - 1) & ~1
    allowed = [full if palettes is None else palettes[v] & full for v in range(n)]
    color = [0] * n
    forbid = [0] * n
    symmetric = palettes is None
    opened = 0

    def assign(v: int, c: int) -> list[int]:
        color[v] = c
        touched = []
        for u in bits(g.adj[v]):
            if not forbid[u] >> c & 1:
                forbid[u] |= 1 << c
                touched.append(u)
        return touched

    def unassign(v: int, c: int, touched: list[int]) -> None:
        color[v] = 0
        for u in touched:
            forbid[u] &= ~(1 << c)

    if symmetric and precolored:
        for c, v in enumerate(bits(precolored), start=1):
            if c > k:
                return None
            assign(v, c)
            opened = c
    uncolored = sum(1 for v in range(n) if not color[v])

    def search(uncolored: int, opened: int) -> bool:
        if not uncolored:
            return True
        budget.tick()
        best, best_key, best_free = -1, None, 0
        for v in range(n):
            if color[v]:
                continue
            free = allowed[v] & ~forbid[v]
            if not free:
                return False
            key = (-popcount(free), popcount(forbid[v]), popcount(g.adj[v]))
            if best_key is None or key > best_key:
                best, best_key, best_free = v, key, free
        v = best
        for c in bits(best_free):
            if symmetric and c > opened + 1:
                break
            touched = assign(v, c)
            if search(uncolored - 1, max(opened, c)):
                return True
            unassign(v, c, touched)
        return False

    if search(uncolored, opened):
        return color
    return None


def is_colorable(g: Graph, k: int, budget: Budget | float | None = None) -> bool:
    if k >= g.n:
        return True
    if k <= 0:
        return False
    clique = _greedy_clique(g, g.vertices)
    if popcount(clique) > k:
        return False
    return color_with(g, k, budget=budget, precolored=clique) is not None


def chromatic_number(g: Graph, budget: Budget | float | None = 10.0) -> tuple[int, Coloring]:
    """Exact chromatic number with a witness colouring.

    Lower bound from a greedy clique, upper bound from greedy DSATUR, then
    tighten downward until a colouring attempt is refuted. Raises
    :class:`BudgetExceeded` (with the bracket ``(lower, upper)`` as
    ``partial``) if the search does not finish in time.
    """
    budget = Budget.of(budget)
    if g.m == 0:
        return 1, Coloring((1,) * g.n)
    clique = _greedy_clique(g, g.vertices)
    lower = popcount(clique)
    best = _dsatur_greedy(g)
    upper = max(best)
    try:
        while upper > lower:
            attempt = color_with(g, upper - 1, budget=budget, precolored=clique)
            if attempt is None:
                break
            best = attempt
            upper = max(attempt)
    except BudgetExceeded as exc:
        raise BudgetExceeded(str(exc), partial=(lower, upper)) from None
    return upper, Coloring(tuple(best))


def chromatic_number_dp(g: Graph) -> int:
    """Independent oracle: inclusion-exclusion over independent-set counts.

    ``G`` is ``k``-colourable iff ``sum_S (-1)^{n-|S|} i(S)^k > 0`` where
    ``i(S)`` counts independent subsets of ``S``. Exponential in ``n``; meant
    for graphs of at most ~18 vertices.
    """
    n = g.n
    if n > 20:
        raise PreconditionError("chromatic_number_dp is limited to 20 vertices")
    size = 1 << n
    ind = [0] * size
    ind[0] = 1
    for s in range(1, size):
        v = lowest(s)
        ind[s] = ind[s & ~(1 << v)] + ind[s & ~(1 << v) & ~g.adj[v]]
    sign = [(-1) ** (n - popcount(s)) for s in range(size)]
    for k in range(1, n + 1):
        if sum(sg * c ** k for sg, c in zip(sign, ind)) > 0:
            return k
    return n


def is_critical(g: Graph, k: int, budget: Budget | float | None = 10.0) -> bool:
    """``chi(g) == k`` and deleting any edge drops it to ``k - 1``."""
    budget = Budget.of(budget)
    chi, _ = chromatic_number(g, budget)
    if chi != k:
        return False
    return all(is_colorable(g.without_edge(u, v), k - 1, budget) for u, v in g.edges())


def critical_subgraph(g: Graph, ell: int, budget: Budget | float | None = None) -> Subgraph:
    """An ``ell``-critical subgraph of ``g`` (relabelled, isolated vertices dropped).

    First drops vertices (in index order) whose removal keeps ``chi >= ell``,
    then scans the surviving edges lexicographically and deletes each edge
    whose removal keeps ``chi >= ell``. One edge pass is a fixpoint: an edge
    kept once stays necessary in every smaller graph.
    """
    budget = Budget.of(budget)
    if ell < 1:
        raise PreconditionError("ell must be positive")
    if is_colorable(g, ell - 1, budget):
        raise PreconditionError(f"chi(g) < {ell}")
    if ell == 1:
        return g.induced(1)
    keep = g.vertices
    for v in range(g.n):
        trial = keep & ~(1 << v)
        if trial and not is_colorable(g.induced(trial).graph, ell - 1, budget):
            keep = trial
    sub = g.induced(keep)
    h = sub.graph
    for u, v in h.edges():
        trial = h.without_edge(u, v)
        if not is_colorable(trial, ell - 1, budget):
            h = trial
    alive = 0
    for v in range(h.n):
        if h.adj[v]:
            alive |= 1 << v
    inner = h.induced(alive)
    return Subgraph(inner.graph, sub.lift(inner.labels))
