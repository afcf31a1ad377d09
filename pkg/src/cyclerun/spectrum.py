"""Exact cycle-length spectra and run statistics.

Cycles live inside 2-connected blocks, so each block is searched on its
own. Within a block, a depth-first search grows simple paths from the
smallest vertex ``s`` of the eventual cycle through vertices above ``s``; a
branch is cut when every length it could still close is already known (or,
for point queries, when the target length is out of reach).

:func:`cycle_lengths_dp` is an independent subset dynamic programme used as
the test oracle and for re-verifying suspected counterexamples.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import Budget, BudgetExceeded, GraphError, PreconditionError
from .graph import Cycle, Graph, bits, cycle_problem, popcount, reach
from .structure import blocks

ENUMERATION_CAP = 16


class SpectrumIncomplete(BudgetExceeded):
    """Budget ran out: ``present`` lengths are certain, ``undecided`` are not."""

    def __init__(self, message: str, present: frozenset, undecided: frozenset):
        super().__init__(message, partial=(present, undecided))
        self.present = present
        self.undecided = undecided


@dataclass(frozen=True)
class SpectrumReport:
    n: int
    m: int
    lengths: tuple[int, ...]
    witnesses: dict[int, Cycle] | None = field(default=None, compare=False)

    def __contains__(self, length: int) -> bool:
        return length in self.lengths

    def to_dict(self) -> dict:
        stats = run_stats(self)
        return {"n": self.n, "m": self.m, "lengths": list(self.lengths),
                "runs": stats.to_dict()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


@dataclass(frozen=True)
class RunStats:
    longest_run: tuple[int, int]  # (start, length)
    longest_odd_run: tuple[int, int]
    odd_count: int
    residues: tuple[int, ...] | None
    modulus: int | None

    def to_dict(self) -> dict:
        out = {"longest": list(self.longest_run), "longest_odd_start": list(self.longest_odd_run),
               "odd_count": self.odd_count}
        if self.modulus is not None:
            out["modulus"] = self.modulus
            out["residues"] = list(self.residues)
        return out


def runs(lengths) -> list[tuple[int, int]]:
    """Maximal runs of consecutive integers as ``(start, length)`` pairs."""
    out: list[tuple[int, int]] = []
    for x in sorted(set(lengths)):
        if out and out[-1][0] + out[-1][1] == x:
            out[-1] = (out[-1][0], out[-1][1] + 1)
        else:
            out.append((x, 1))
    return out


def run_stats(s: SpectrumReport | tuple | list | set | frozenset, k: int | None = None) -> RunStats:
    """Longest run, longest run starting at an odd length, odd count, residues.

    Runs starting at an odd length include sub-runs of a longer run, so
    ``{4,5,6,7}`` has an odd-start run ``(5, 3)``.
    """
    lengths = sorted(set(s.lengths if isinstance(s, SpectrumReport) else s))
    best = (0, 0)
    best_odd = (0, 0)
    for start, size in runs(lengths):
        if size > best[1]:
            best = (start, size)
        odd_start = start if start % 2 else start + 1
        odd_size = size - (odd_start - start)
        if odd_size > best_odd[1]:
            best_odd = (odd_start, odd_size)
    residues = None if k is None else tuple(sorted({x % k for x in lengths}))
    return RunStats(best, best_odd, sum(1 for x in lengths if x % 2), residues, k)


def _cyclic_blocks(g: Graph) -> list[int]:
    out = []
    for comp in g.components():
        if popcount(comp) < 3:
            continue
        sub = g.induced(comp)
        for b in blocks(sub.graph).blocks:
            if popcount(b) >= 3:
                out.append(sub.lift_mask(b))
    return out


def _check_enumerable(g: Graph, budget: Budget | float | None, max_n: int) -> Budget:
    if g.large:
        raise GraphError("exhaustive spectrum search refuses graphs above the vertex cap")
    if g.n > max_n and budget is None:
        raise PreconditionError(f"n={g.n} exceeds the enumeration cap {max_n}; pass a budget")
    return Budget.of(budget)


class _Search:
    """Depth-first simple-path search inside one vertex set."""

    def __init__(self, g: Graph, budget: Budget):
        self.g = g
        self.adj = g.adj
        self.budget = budget

    def lengths_in(self, block: int, found: dict[int, tuple | None], want_witness: bool) -> None:
        """Record every cycle length inside ``block`` into ``found``."""
        top = popcount(block)
        for s in bits(block):
            allowed = block & ~((2 << s) - 1)
            if popcount(allowed) < 2:
                break
            target = set(range(3, popcount(allowed) + 2)) - found.keys()
            if not target:
                continue
            path = [s]
            self._grow(s, s, 1 << s, allowed, path, found, want_witness, top)

    def _grow(self, s, v, visited, allowed, path, found, want_witness, top):
        self.budget.tick()
        depth = len(path) - 1
        if depth >= 2 and self.adj[v] >> s & 1 and depth + 1 not in found:
            found[depth + 1] = tuple(path) if want_witness else None
        free = allowed & ~visited
        nxt = self.adj[v] & free
        if not nxt:
            return
        region = reach(self.g, v, free | (1 << v)) & ~(1 << v)
        if not region & self.adj[s]:
            return
        most = depth + 1 + popcount(region)
        if all(length in found for length in range(max(depth + 2, 3), min(most, top) + 1)):
            return
        for u in bits(nxt & region):
            path.append(u)
            self._grow(s, u, visited | (1 << u), allowed, path, found, want_witness, top)
            path.pop()

    def cycle_of_length(self, block: int, ell: int) -> tuple | None:
        for s in bits(block):
            allowed = block & ~((2 << s) - 1)
            if popcount(allowed) + 1 < ell:
                break
            hit = self._exact(s, s, 1 << s, allowed, [s], ell)
            if hit:
                return hit
        return None

    def _exact(self, s, v, visited, allowed, path, ell):
        self.budget.tick()
        depth = len(path) - 1
        if depth == ell - 1:
            return tuple(path) if self.adj[v] >> s & 1 else None
        free = allowed & ~visited
        region = reach(self.g, v, free | (1 << v)) & ~(1 << v)
        if depth + popcount(region) < ell - 1 or not region & self.adj[s]:
            return None
        for u in bits(self.adj[v] & region):
            path.append(u)
            hit = self._exact(s, u, visited | (1 << u), allowed, path, ell)
            path.pop()
            if hit:
                return hit
        return None

    def cycle_at_least(self, block: int, min_len: int) -> tuple | None:
        for s in bits(block):
            allowed = block & ~((2 << s) - 1)
            if popcount(allowed) + 1 < min_len:
                break
            hit = self._long(s, s, 1 << s, allowed, [s], min_len)
            if hit:
                return hit
        return None

    def _long(self, s, v, visited, allowed, path, min_len):
        self.budget.tick()
        depth = len(path) - 1
        if depth + 1 >= min_len and self.adj[v] >> s & 1:
            return tuple(path)
        free = allowed & ~visited
        region = reach(self.g, v, free | (1 << v)) & ~(1 << v)
        if depth + 1 + popcount(region) < min_len or not region & self.adj[s]:
            return None
        for u in bits(self.adj[v] & region):
            path.append(u)
            hit = self._long(s, u, visited | (1 << u), allowed, path, min_len)
            path.pop()
            if hit:
                return hit
        return None


def cycle_lengths(g: Graph, budget: Budget | float | None = None, *,
                  witnesses: bool = False, max_n: int = ENUMERATION_CAP) -> SpectrumReport:
    """The exact set of cycle lengths of ``g``.

    Graphs above ``max_n`` vertices need an explicit budget. When the budget
    runs out, :class:`SpectrumIncomplete` reports what was settled.
    """
    budget = _check_enumerable(g, budget, max_n)
    found: dict[int, tuple | None] = {}
    search = _Search(g, budget)
    blocks_ = _cyclic_blocks(g)
    try:
        for block in blocks_:
            search.lengths_in(block, found, witnesses)
    except BudgetExceeded as exc:
        top = max((popcount(b) for b in blocks_), default=2)
        present = frozenset(found)
        raise SpectrumIncomplete(str(exc), present,
                                 frozenset(range(3, top + 1)) - present) from None
    lengths = tuple(sorted(found))
    return SpectrumReport(g.n, g.m, lengths,
                          {k: found[k] for k in lengths} if witnesses else None)


def has_cycle_of_length(g: Graph, ell: int, budget: Budget | float | None = None, *,
                        max_n: int = ENUMERATION_CAP) -> Cycle | None:
    """A cycle of exactly ``ell`` vertices, or ``None`` if there is none."""
    if not 3 <= ell <= g.n:
        raise PreconditionError(f"length {ell} outside 3..{g.n}")
    budget = _check_enumerable(g, budget, max_n)
    search = _Search(g, budget)
    for block in _cyclic_blocks(g):
        if popcount(block) >= ell:
            hit = search.cycle_of_length(block, ell)
            if hit:
                return hit
    return None


def longest_cycle(g: Graph, budget: Budget | float | None = None, *,
                  max_n: int = ENUMERATION_CAP) -> Cycle | None:
    """A longest cycle of ``g``, or ``None`` for a forest.

    Tries lengths from the largest block size downward.
    """
    budget = _check_enumerable(g, budget, max_n)
    search = _Search(g, budget)
    blocks_ = _cyclic_blocks(g)
    top = max((popcount(b) for b in blocks_), default=0)
    for ell in range(top, 2, -1):
        for block in blocks_:
            if popcount(block) >= ell:
                hit = search.cycle_of_length(block, ell)
                if hit:
                    return hit
    return None


def cycle_at_least(g: Graph, min_len: int, budget: Budget | float | None = None) -> Cycle | None:
    """Some cycle with at least ``min_len`` vertices, or ``None`` if none exists.

    No size cap: the search stops at the first long cycle, which is cheap
    whenever one exists. Works on large graphs too.
    """
    budget = Budget.of(budget)
    search = _Search(g, budget)
    for block in _cyclic_blocks(g):
        if popcount(block) >= min_len:
            hit = search.cycle_at_least(block, max(min_len, 3))
            if hit:
                return hit
    return None


def cycle_lengths_dp(g: Graph) -> frozenset[int]:
    """Independent oracle: subset DP over Hamiltonian paths.

    ``ends[S]`` is the set of vertices ``v`` such that some path starting at
    ``min(S)`` visits exactly ``S`` and ends at ``v``. A cycle on ``S`` exists
    iff some such end is adjacent to ``min(S)`` and ``|S| >= 3``.
    """
    n = g.n
    if n > 20:
        raise PreconditionError("cycle_lengths_dp is limited to 20 vertices")
    found = set()
    for s in range(n):
        ends = {1 << s: 1 << s}
        frontier = [1 << s]
        size = 1
        while frontier:
            size += 1
            nxt: dict[int, int] = {}
            for mask in frontier:
                for v in bits(ends[mask]):
                    for u in bits(g.adj[v] & ~mask & ~((2 << s) - 1)):
                        key = mask | (1 << u)
                        nxt[key] = nxt.get(key, 0) | (1 << u)
            for mask, e in nxt.items():
                if size >= 3 and e & g.adj[s]:
                    found.add(size)
            ends.update(nxt)
            frontier = list(nxt)
    return frozenset(found)


def has_cycle_of_length_dp(g: Graph, ell: int) -> bool:
    return ell in cycle_lengths_dp(g)


def validate_witnesses(g: Graph, report: SpectrumReport) -> bool:
    if report.witnesses is None:
        return False
    return all(len(c) == k and cycle_problem(g, c) is None for k, c in report.witnesses.items())


__all__ = [
    "ENUMERATION_CAP", "RunStats", "SpectrumIncomplete", "SpectrumReport", "cycle_at_least",
    "cycle_lengths", "cycle_lengths_dp", "has_cycle_of_length", "has_cycle_of_length_dp",
    "longest_cycle", "run_stats", "runs", "validate_witnesses",
]
