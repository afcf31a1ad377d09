"""Long cycle or complete bipartite graph."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import Budget, Finding, PreconditionError
from ..graph import Graph, bits, popcount, two_coloring
from ..spectrum import cycle_at_least
from ..structure import is_triangle_free, vertex_connectivity_at_least


@dataclass(frozen=True)
class DichotomyResult:
    """Either ``cycle`` (length >= 2k+2) or the sides of ``K_{k,n}``."""

    cycle: tuple[int, ...] | None = None
    small: int | None = None
    large: int | None = None

    @property
    def is_cycle(self) -> bool:
        return self.cycle is not None

    @property
    def n_large(self) -> int:
        return popcount(self.large) if self.large is not None else 0

    def to_dict(self) -> dict:
        if self.cycle is not None:
            return {"cycle": list(self.cycle)}
        return {"small": list(bits(self.small)), "large": list(bits(self.large))}


def complete_bipartite_sides(g: Graph) -> tuple[int, int] | None:
    """``(small, large)`` side masks if ``g`` is complete bipartite."""
    side = two_coloring(g)
    if side is None or not g.is_connected():
        return None
    a = sum(1 << v for v, s in side.items() if s == 0)
    b = g.vertices & ~a
    if g.m != popcount(a) * popcount(b):
        return None
    return (a, b) if popcount(a) <= popcount(b) else (b, a)


def long_cycle_or_complete_bipartite(g: Graph, k: int,
                                     budget: Budget | float | None = None) -> DichotomyResult:
    """A cycle of length at least ``2k+2``, or the witness that ``g = K_{k,n}``."""
    if k < 3:
        raise PreconditionError("k must be at least 3")
    if not vertex_connectivity_at_least(g, 2):
        raise PreconditionError("graph must be 2-connected")
    if not is_triangle_free(g):
        raise PreconditionError("graph must be triangle-free")
    if g.min_degree() < k:
        raise PreconditionError(f"minimum degree below {k}")
    c = cycle_at_least(g, 2 * k + 2, budget)
    if c is not None:
        return DichotomyResult(cycle=c)
    sides = complete_bipartite_sides(g)
    if sides is None or popcount(sides[0]) != k:
        raise Finding("no long cycle and not K_{k,n}", k=k, n=g.n)
    return DichotomyResult(small=sides[0], large=sides[1])
