"""Immutable simple graphs stored as per-vertex neighbour bitsets.

Vertex sets are plain ``int`` bitmasks (bit ``v`` set means ``v`` is in the
set). Paths and cycles are tuples of vertices; :func:`is_path` and
:func:`is_cycle` check them against a graph.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import GraphError

MAX_N = 64

Path = tuple  # v_0 .. v_l, length l = number of edges
Cycle = tuple  # v_0 .. v_{t-1}, closing edge v_{t-1} v_0 implied


def bits(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbour bitset of ``v``. Graphs above :data:`MAX_N`
    vertices need ``allow_large=True``; such graphs are accepted by BFS,
    colouring and the triangle-free pipeline but refused by exhaustive
    spectrum enumeration.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int], *, allow_large: bool = False):
        if n < 1:
            raise GraphError("a graph needs at least one vertex")
        if n > MAX_N and not allow_large:
            raise GraphError(f"n={n} exceeds the {MAX_N}-vertex cap")
        if len(adj) != n:
            raise GraphError("adjacency length does not match n")
        full = (1 << n) - 1
        adj = tuple(int(a) for a in adj)
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at {v}-{u}")
        self.n = n
        self.adj = adj
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], *,
                   allow_large: bool = False) -> "Graph":
        if n < 1 or (n > MAX_N and not allow_large):
            raise GraphError(f"vertex count {n} outside 1..{MAX_N}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, allow_large=allow_large)

    @property
    def large(self) -> bool:
        return self.n > MAX_N

    @property
    def vertices(self) -> int:
        """All vertices as a bitmask."""
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def min_degree(self, within: int | None = None) -> int:
        vs = self.vertices if within is None else within
        if not vs:
            return 0
        return min(popcount(self.adj[v] & vs) for v in bits(vs))

    def neighborhood(self, s: int) -> int:
        """``N(S)``: vertices outside ``s`` adjacent to some vertex of ``s``."""
        out = 0
        for v in bits(s):
            out |= self.adj[v]
        return out & ~s

    def without_edge(self, u: int, v: int) -> "Graph":
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, adj, allow_large=self.large)

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise GraphError("loop edge")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, adj, allow_large=self.large)

    def induced(self, vertices: int | Iterable[int]) -> "Subgraph":
        """Induced subgraph relabelled to ``0..len-1`` in increasing order."""
        mask = vertices if isinstance(vertices, int) else mask_of(vertices)
        labels = tuple(bits(mask))
        if not labels:
            raise GraphError("induced subgraph on an empty vertex set")
        index = {v: i for i, v in enumerate(labels)}
        adj = []
        for v in labels:
            row = 0
            for u in bits(self.adj[v] & mask):
                row |= 1 << index[u]
            adj.append(row)
        return Subgraph(Graph(len(labels), adj, allow_large=len(labels) > MAX_N), labels)

    def complement(self) -> "Graph":
        full = self.vertices
        return Graph(self.n, [full & ~a & ~(1 << v) for v, a in enumerate(self.adj)],
                     allow_large=self.large)

    def components(self, within: int | None = None) -> list[int]:
        """Connected components of ``G[within]`` as masks, by smallest vertex."""
        rest = self.vertices if within is None else within
        out = []
        while rest:
            comp = reach(self, lowest(rest), rest)
            out.append(comp)
            rest &= ~comp
        return out

    def is_connected(self, within: int | None = None) -> bool:
        vs = self.vertices if within is None else within
        return bool(vs) and reach(self, lowest(vs), vs) == vs

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class Subgraph(NamedTuple):
    """A relabelled subgraph plus the parent vertex behind each new label."""

    graph: Graph
    labels: tuple[int, ...]

    def lift(self, seq: Iterable[int]) -> tuple[int, ...]:
        return tuple(self.labels[v] for v in seq)

    def lift_mask(self, mask: int) -> int:
        return mask_of(self.labels[v] for v in bits(mask))

    def lower_mask(self, mask: int) -> int:
        return mask_of(i for i, v in enumerate(self.labels) if mask >> v & 1)


def reach(g: Graph, start: int, within: int) -> int:
    """Vertices reachable from ``start`` inside ``G[within]``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def is_path(g: Graph, path: Sequence[int]) -> bool:
    if not path:
        return False
    if len(set(path)) != len(path) or any(not 0 <= v < g.n for v in path):
        return False
    return all(g.has_edge(a, b) for a, b in zip(path, path[1:]))


def is_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    return len(cycle) >= 3 and is_path(g, cycle) and g.has_edge(cycle[-1], cycle[0])


def cycle_problem(g: Graph, cycle: Sequence[int]) -> str | None:
    """Why ``cycle`` is not a cycle of ``g``, or ``None`` if it is one."""
    if len(cycle) < 3:
        return "too short"
    if any(not isinstance(v, int) or not 0 <= v < g.n for v in cycle):
        return "vertex out of range"
    if len(set(cycle)) != len(cycle):
        return "not simple"
    for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
        if not g.has_edge(a, b):
            return f"missing edge {a}-{b}"
    return None


def two_coloring(g: Graph, within: int | None = None) -> dict[int, int] | None:
    """A 0/1 side for each vertex of ``G[within]``, or ``None`` if not bipartite.

    Within each component the smallest vertex gets side 0.
    """
    vs = g.vertices if within is None else within
    side: dict[int, int] = {}
    for comp in g.components(vs):
        root = lowest(comp)
        side[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in bits(g.adj[v] & vs):
                if u not in side:
                    side[u] = side[v] ^ 1
                    stack.append(u)
                elif side[u] == side[v]:
                    return None
    return side


def is_bipartite(g: Graph, within: int | None = None) -> bool:
    return two_coloring(g, within) is not None


def shortest_path(g: Graph, sources: int, targets: int, within: int) -> tuple[int, ...] | None:
    """Shortest path from a vertex of ``sources`` to one of ``targets`` in ``G[within]``.

    Ties go to the smallest vertex indices (BFS in index order).
    """
    sources &= within
    targets &= within
    if not sources or not targets:
        return None
    parent = {v: None for v in bits(sources)}
    frontier = list(bits(sources))
    while frontier:
        for v in frontier:
            if targets >> v & 1:
                out = [v]
                while parent[out[-1]] is not None:
                    out.append(parent[out[-1]])
                return tuple(reversed(out))
        nxt = []
        for v in frontier:
            for u in bits(g.adj[v] & within):
                if u not in parent:
                    parent[u] = v
                    nxt.append(u)
        nxt.sort()
        frontier = nxt
    return None
