"""x-y paths by length, admissible path families, and A-B paths from a cycle."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import Budget, Finding, PreconditionError
from ..graph import Graph, bits, is_path, lowest, mask_of, popcount, reach, shortest_path
from ..structure import is_two_connected_rooted, rooted_min_degree


def path_lengths(g: Graph, x: int, y: int, within: int | None = None,
                 budget: Budget | float | None = None,
                 lengths: set[int] | None = None) -> dict[int, tuple[int, ...]]:
    """One x-y path (vertex tuple) for every achievable length in ``G[within]``.

    With ``lengths`` given, only those lengths are searched for and the
    search stops once all are found.
    """
    budget = Budget.of(budget)
    vs = g.vertices if within is None else within
    if not (vs >> x & 1 and vs >> y & 1) or x == y:
        raise PreconditionError("x and y must be distinct vertices of the region")
    found: dict[int, tuple[int, ...]] = {}
    wanted = None if lengths is None else set(lengths)
    top = popcount(vs) - 1
    path = [x]

    def done(lo: int, hi: int) -> bool:
        if wanted is not None:
            return all(ell in found or ell not in wanted for ell in range(lo, hi + 1))
        return all(ell in found for ell in range(lo, hi + 1))

    def grow(v: int, visited: int) -> None:
        budget.tick()
        depth = len(path) - 1
        free = vs & ~visited
        region = reach(g, v, free | (1 << v)) & ~(1 << v)
        if not region >> y & 1:
            return
        if done(depth + 1, min(depth + popcount(region), top)):
            return
        for u in bits(g.adj[v] & region):
            path.append(u)
            if u == y:
                if depth + 1 not in found:
                    found[depth + 1] = tuple(path)
            else:
                grow(u, visited | (1 << u))
            path.pop()

    grow(x, 1 << x)
    return found


@dataclass(frozen=True)
class AdmissibleFamily:
    """Paths between ``x`` and ``y`` whose lengths form an arithmetic
    progression with difference 1 or 2, the shortest having length >= 2."""

    x: int
    y: int
    paths: tuple[tuple[int, ...], ...]
    difference: int

    @property
    def lengths(self) -> list[int]:
        return [len(p) - 1 for p in self.paths]

    def is_admissible(self, g: Graph) -> bool:
        ls = self.lengths
        if not ls or ls[0] < 2 or self.difference not in (1, 2):
            return False
        if any(b - a != self.difference for a, b in zip(ls, ls[1:])):
            return False
        return all(is_path(g, p) and p[0] == self.x and p[-1] == self.y for p in self.paths)


def pick_progression(found: dict[int, tuple], k: int) -> tuple[int, int] | None:
    """``(first, difference)`` of a k-term progression among ``found`` lengths.

    Difference 1 beats difference 2; then the smallest first length.
    """
    have = set(found)
    for d in (1, 2):
        for first in sorted(have):
            if first >= 2 and all(first + d * i in have for i in range(k)):
                return first, d
    return None


def admissible_paths(g: Graph, x: int, y: int, k: int, budget: Budget | float | None = None,
                     within: int | None = None) -> AdmissibleFamily:
    """``k`` admissible x-y paths in a 2-connected rooted graph of rooted
    minimum degree at least ``k + 1``.

    Found by exhaustive search over path lengths. Under the precondition such
    a family always exists, so failing to find one raises :class:`Finding`.
    """
    if k < 1:
        raise PreconditionError("k must be positive")
    if within is not None and within != g.vertices:
        sub = g.induced(within)
        index = {v: i for i, v in enumerate(sub.labels)}
        fam = admissible_paths(sub.graph, index[x], index[y], k, budget)
        return AdmissibleFamily(x, y, tuple(sub.lift(p) for p in fam.paths), fam.difference)
    if x == y:
        raise PreconditionError("x and y must differ")
    if not is_two_connected_rooted(g, x, y):
        raise PreconditionError("rooted graph is not 2-connected")
    if rooted_min_degree(g, x, y) < k + 1:
        raise PreconditionError(f"rooted minimum degree below {k + 1}")
    found = path_lengths(g, x, y, budget=budget)
    pick = pick_progression(found, k)
    if pick is None:
        raise Finding("no admissible family although the rooted graph qualifies",
                      lengths=sorted(found), k=k)
    first, d = pick
    paths = tuple(found[first + d * i] for i in range(k))
    return AdmissibleFamily(x, y, paths, d)


class BipartitePartition(Exception):
    """``(A, B)`` is a bipartition of the graph, the one case with no A-B paths
    of every length."""


def _side(a_mask: int, v: int) -> int:
    return a_mask >> v & 1


def ab_paths_from_cycle(g: Graph, a_mask: int, b_mask: int,
                        cycle: tuple[int, ...]) -> list[tuple[int, ...]]:
    """A-B paths of every length ``1 .. |V(C)|-1``; entry ``j-1`` has length ``j``.

    ``g`` connected with minimum degree at least three, ``(A, B)`` a
    non-trivial partition of its vertices, ``cycle`` a cycle of ``g``.
    Raises :class:`BipartitePartition` when every edge crosses ``(A, B)``.
    """
    full = g.vertices
    if a_mask & b_mask or a_mask | b_mask != full or not a_mask or not b_mask:
        raise PreconditionError("(A, B) must be a non-trivial partition of V(g)")
    if not g.is_connected():
        raise PreconditionError("graph must be connected")
    if g.min_degree() < 3:
        raise PreconditionError("minimum degree must be at least three")
    if len(cycle) < 3 or not is_path(g, cycle) or not g.has_edge(cycle[-1], cycle[0]):
        raise PreconditionError("not a cycle of g")
    if all(_side(a_mask, u) != _side(a_mask, v) for u, v in g.edges()):
        raise BipartitePartition("every edge crosses (A, B)")
    s = len(cycle) - 1
    vc = mask_of(cycle)
    if not vc & b_mask or not vc & a_mask:
        out = _cycle_on_one_side(g, a_mask, b_mask, cycle)
    else:
        internal = [(u, v) for u, v in g.induced(vc).graph.edges()]
        sub_labels = tuple(bits(vc))
        internal = [(sub_labels[u], sub_labels[v]) for u, v in internal
                    if _side(a_mask, sub_labels[u]) == _side(a_mask, sub_labels[v])]
        if internal:
            out = _with_internal_edge(g, a_mask, cycle, internal)
        else:
            out = _all_crossing(g, a_mask, cycle)
    out = out[:s]
    for j, p in enumerate(out, start=1):
        if len(p) - 1 != j or not is_path(g, p) or _side(a_mask, p[0]) == _side(a_mask, p[-1]):
            raise Finding("A-B path construction produced an invalid path", length=j, path=p)
    if len(out) != s:
        raise Finding("A-B path construction fell short", have=len(out), want=s)
    return out


def _rotate(cycle, start_vertex, reverse=False):
    c = list(reversed(cycle)) if reverse else list(cycle)
    i = c.index(start_vertex)
    return c[i:] + c[:i]


def _cycle_on_one_side(g, a_mask, b_mask, cycle):
    vc = mask_of(cycle)
    other = b_mask if not vc & b_mask else a_mask
    q = shortest_path(g, vc, other, g.vertices)
    c = _rotate(cycle, q[0])
    t = len(q) - 1
    by_len = {}
    for i in range(t):
        by_len[t - i] = tuple(q[i:])
    for j in range(1, len(c)):
        by_len[j + t] = tuple(reversed(c[:j + 1])) + tuple(q[1:])
    return [by_len[j] for j in sorted(by_len)]


def _with_internal_edge(g, a_mask, cycle, internal):
    """Some edge inside V(C) joins two vertices on the same side."""
    vc = mask_of(cycle)
    on_cycle = {frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))}
    chords = [(u, v) for u, v in g.induced(vc).graph.edges()]
    labels = tuple(bits(vc))
    chords = [(labels[u], labels[v]) for u, v in chords]
    chords = [e for e in chords if frozenset(e) not in on_cycle]
    if chords:
        internal_chords = [e for e in chords if frozenset(e) not in on_cycle and e in internal]
        chord = (internal_chords or chords)[0]
        return _search_cycle_with_chord(g, a_mask, cycle, chord)
    side = [_side(a_mask, v) for v in cycle]
    t = len(cycle)
    for i in range(t):
        if side[i] == side[(i + 1) % t] and side[i - 1] != side[i]:
            break
    c = cycle[i:] + cycle[:i]
    c = list(c)
    s = t - 1
    v0 = c[0]
    same = side[i]
    x = lowest(g.adj[v0] & ~vc)
    out = {1: (c[s], c[0])}
    if _side(a_mask, x) != same:
        for j in range(2, s + 1):
            tail = tuple(c[j:]) + (c[0],)
            if _side(a_mask, c[j]) == same:
                out[s - j + 2] = tail + (x,)
            else:
                out[s - j + 2] = tail + (c[1],)
    else:
        for j in range(1, s):
            if _side(a_mask, c[j]) != same:
                out[j + 1] = (x,) + tuple(c[:j + 1])
            else:
                out[j + 1] = (c[s],) + tuple(c[:j + 1])
    return [out[j] for j in sorted(out)]


def _search_cycle_with_chord(g, a_mask, cycle, chord):
    """Direct search inside the cycle plus one chord."""
    edges = [(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))] + [chord]
    h = Graph.from_edges(g.n, edges, allow_large=g.large)
    vc = mask_of(cycle)
    found = {}
    members = list(bits(vc))
    for a in members:
        if not _side(a_mask, a):
            continue
        for b in members:
            if _side(a_mask, b):
                continue
            for ell, p in path_lengths(h, a, b, vc).items():
                found.setdefault(ell, p)
    return [found[j] for j in sorted(found)]


def _all_crossing(g, a_mask, cycle):
    """Every edge inside V(C) crosses; extend C by a path that starts with an
    internal edge and then crosses at every step."""
    vc = mask_of(cycle)
    touched = 0
    for u, v in g.edges():
        if _side(a_mask, u) == _side(a_mask, v):
            touched |= (1 << u) | (1 << v)
    p = shortest_path(g, vc, touched, g.vertices)
    end = p[-1]
    mates = [u for u in bits(g.adj[end]) if _side(a_mask, u) == _side(a_mask, end)]
    q = mates[0]
    if vc >> q & 1:
        lead = [end, q]
    else:
        lead = [q] + list(reversed(p))
    c = _rotate(cycle, lead[-1])
    walk = lead + c[1:]
    s = len(cycle) - 1
    out = []
    for j in range(1, s + 1):
        out.append(tuple(walk[1:j + 2]) if j % 2 else tuple(walk[0:j + 1]))
    return out
