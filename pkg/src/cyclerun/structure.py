"""Structural primitives: blocks, connectivity, small cliques, contraction, BFS."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .errors import GraphError, PreconditionError
from .graph import Graph, bits, lowest, mask_of, popcount


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks, cut-vertices and block-cut tree of a connected graph.

    ``tree`` lists ``(block_index, cut_vertex)`` incidences, which are exactly
    the edges of the block-cut tree.
    """

    blocks: tuple[int, ...]
    cut_vertices: int
    tree: tuple[tuple[int, int], ...]

    def block_of_edge(self, u: int, v: int) -> int:
        pair = (1 << u) | (1 << v)
        for i, b in enumerate(self.blocks):
            if b & pair == pair:
                return i
        raise KeyError((u, v))

    def end_blocks(self) -> list[int]:
        """Indices of blocks holding at most one cut-vertex."""
        return [i for i, b in enumerate(self.blocks) if popcount(b & self.cut_vertices) <= 1]


def blocks(g: Graph) -> BlockDecomposition:
    """Block decomposition by iterative Hopcroft-Tarjan.

    Blocks are ordered by their smallest vertex (ties by the full mask).
    """
    if not g.is_connected():
        raise PreconditionError("blocks() needs a connected graph")
    n = g.n
    if n == 1:
        return BlockDecomposition((1,), 0, ())
    disc = [-1] * n
    low = [0] * n
    found: list[int] = []
    cuts = 0
    timer = 0
    edge_stack: list[tuple[int, int]] = []
    root = 0
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    stack = [(root, -1, iter(bits(g.adj[root])))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for u in it:
            if disc[u] == -1:
                disc[u] = low[u] = timer
                timer += 1
                edge_stack.append((v, u))
                stack.append((u, v, iter(bits(g.adj[u]))))
                if v == root:
                    root_children += 1
                advanced = True
                break
            if u != parent and disc[u] < disc[v]:
                edge_stack.append((v, u))
                low[v] = min(low[v], disc[u])
        if advanced:
            continue
        stack.pop()
        if parent == -1:
            continue
        low[parent] = min(low[parent], low[v])
        if low[v] >= disc[parent]:
            if parent != root:
                cuts |= 1 << parent
            block = 0
            while True:
                a, b = edge_stack.pop()
                block |= (1 << a) | (1 << b)
                if (a, b) == (parent, v):
                    break
            found.append(block)
    if root_children > 1:
        cuts |= 1 << root
    ordered = tuple(sorted(found, key=lambda b: (lowest(b), b)))
    tree = tuple((i, c) for i, b in enumerate(ordered) for c in bits(b & cuts))
    return BlockDecomposition(ordered, cuts, tree)


def vertex_connectivity_at_least(g: Graph, j: int) -> bool:
    """True iff ``g`` has more than ``j`` vertices and stays connected after
    deleting any fewer than ``j`` of them (``j`` in 1..3)."""
    if j not in (1, 2, 3):
        raise ValueError("j must be 1, 2 or 3")
    full = g.vertices
    if g.n <= j or not g.is_connected():
        return False
    if j >= 2:
        for v in range(g.n):
            if not g.is_connected(full & ~(1 << v)):
                return False
    if j == 3:
        for u, v in combinations(range(g.n), 2):
            if not g.is_connected(full & ~(1 << u) & ~(1 << v)):
                return False
    return True


def two_separators(g: Graph) -> list[tuple[int, int]]:
    """All vertex pairs whose removal disconnects ``g``, lexicographically."""
    full = g.vertices
    return [(u, v) for u, v in combinations(range(g.n), 2)
            if not g.is_connected(full & ~(1 << u) & ~(1 << v))]


def has_triangle(g: Graph, within: int | None = None) -> tuple[int, int, int] | None:
    """Lexicographically smallest triangle, or ``None``."""
    vs = g.vertices if within is None else within
    for u in bits(vs):
        higher = g.adj[u] & vs & ~((2 << u) - 1)
        for v in bits(higher):
            common = g.adj[v] & higher & ~((2 << v) - 1)
            if common:
                return (u, v, lowest(common))
    return None


def is_triangle_free(g: Graph) -> bool:
    return has_triangle(g) is None


class K4Minus(NamedTuple):
    """A ``K_4`` minus an edge: ``v1`` has degree two, missing edge ``v1 v4``.

    ``v2`` and ``v3`` are the two degree-three vertices (``v2 < v3``), so
    ``v2`` is a neighbour of ``v1`` and ``v3 v4`` is an edge.
    """

    v1: int
    v2: int
    v3: int
    v4: int


def find_k4_minus(g: Graph) -> K4Minus | None:
    """Lexicographically smallest 4-set spanning at least five edges."""
    for quad in combinations(range(g.n), 4):
        missing = [(a, b) for a, b in combinations(quad, 2) if not g.has_edge(a, b)]
        if len(missing) > 1:
            continue
        if missing:
            a, b = missing[0]
        else:
            a, b = quad[0], quad[3]
        mid = sorted(set(quad) - {a, b})
        return K4Minus(a, mid[0], mid[1], b)
    return None


def is_clique(g: Graph, vs: int) -> bool:
    return all(g.adj[v] & vs == vs & ~(1 << v) for v in bits(vs))


def max_clique_containing(g: Graph, seed: int, forbidden: int = 0) -> int:
    """Inclusion-maximal clique of ``g - forbidden`` containing ``seed``.

    Greedy: repeatedly add the smallest vertex adjacent to the whole clique.
    """
    if seed & forbidden:
        raise PreconditionError("seed meets the forbidden set")
    if not is_clique(g, seed):
        raise PreconditionError("seed is not a clique")
    clique = seed
    cand = g.vertices & ~forbidden & ~seed
    for v in bits(seed):
        cand &= g.adj[v]
    while cand:
        v = lowest(cand)
        clique |= 1 << v
        cand &= g.adj[v] & ~(1 << v)
    return clique


class Contraction(NamedTuple):
    graph: Graph
    w: int
    labels: tuple[int, ...]  # parent vertex behind each label; -1 for w


def contract(g: Graph, s: int) -> Contraction:
    """Contract the vertex set ``s`` into a single new vertex ``w``.

    Surviving vertices keep their relative order; ``w`` is the last label.
    """
    if not s:
        raise PreconditionError("cannot contract an empty set")
    keep = [v for v in range(g.n) if not s >> v & 1]
    index = {v: i for i, v in enumerate(keep)}
    w = len(keep)
    adj = [0] * (w + 1)
    for v in keep:
        for u in bits(g.adj[v] & ~s):
            adj[index[v]] |= 1 << index[u]
        if g.adj[v] & s:
            adj[index[v]] |= 1 << w
            adj[w] |= 1 << index[v]
    return Contraction(Graph(w + 1, adj, allow_large=g.large), w, tuple(keep) + (-1,))


class BFSLayers(NamedTuple):
    layers: tuple[int, ...]
    parent: tuple[int, ...]  # -1 for the root
    depth: tuple[int, ...]

    def tree_path(self, v: int) -> list[int]:
        """Tree path from ``v`` up to the root."""
        out = [v]
        while self.parent[out[-1]] != -1:
            out.append(self.parent[out[-1]])
        return out


def bfs_layers(g: Graph, root: int = 0) -> BFSLayers:
    """Distance layers from ``root`` plus the BFS tree.

    The parent of each non-root vertex is its smallest neighbour in the
    previous layer.
    """
    if not g.is_connected():
        raise PreconditionError("bfs_layers() needs a connected graph")
    if not 0 <= root < g.n:
        raise GraphError(f"root {root} out of range")
    parent = [-1] * g.n
    depth = [-1] * g.n
    depth[root] = 0
    layers = [1 << root]
    seen = 1 << root
    while True:
        nxt = 0
        for v in bits(layers[-1]):
            nxt |= g.adj[v]
        nxt &= ~seen
        if not nxt:
            break
        for u in bits(nxt):
            parent[u] = lowest(g.adj[u] & layers[-1])
            depth[u] = len(layers)
        layers.append(nxt)
        seen |= nxt
    return BFSLayers(tuple(layers), tuple(parent), tuple(depth))


def disjoint_paths(g: Graph, sources: int, targets: int, count: int,
                   within: int | None = None) -> list[tuple[int, ...]] | None:
    """``count`` vertex-disjoint paths from ``sources`` to ``targets`` in ``G[within]``.

    Each path meets ``sources`` only at its first vertex and ``targets`` only
    at its last; a vertex in both sets is a path of length zero. Unit vertex
    capacities, shortest augmenting paths. Returns ``None`` if fewer exist.
    """
    vs = g.vertices if within is None else within
    sources &= vs
    targets &= vs
    src, snk = "s", "t"
    cap: dict[tuple, int] = {}
    out: dict[object, list] = {}
    forward: list[tuple] = []

    def arc(a, b):
        forward.append((a, b))
        cap[(a, b)] = 1
        cap.setdefault((b, a), 0)
        out.setdefault(a, []).append(b)
        out.setdefault(b, []).append(a)

    for v in bits(vs):
        arc((v, 0), (v, 1))
        if sources >> v & 1:
            arc(src, (v, 0))
        if targets >> v & 1:
            arc((v, 1), snk)
        for u in bits(g.adj[v] & vs):
            if not targets >> v & 1 and not sources >> u & 1:
                arc((v, 1), (u, 0))
    paths_found = 0
    while paths_found < count:
        prev = {src: None}
        queue = [src]
        while queue and snk not in prev:
            nxt = []
            for a in queue:
                for b in out.get(a, ()):
                    if b not in prev and cap[(a, b)] > 0:
                        prev[b] = a
                        nxt.append(b)
            queue = nxt
        if snk not in prev:
            return None
        b = snk
        while prev[b] is not None:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        paths_found += 1
    succ = {a[0]: b[0] for a, b in forward
            if a != src and b != snk and a[1] == 1 and cap[(a, b)] == 0}
    paths = []
    for s in bits(sources):
        if cap[(src, (s, 0))] != 0:
            continue
        path = [s]
        while cap.get(((path[-1], 1), snk), 1) != 0:
            path.append(succ[path[-1]])
        paths.append(tuple(path))
    return paths


def fan(g: Graph, x: int, targets: int, count: int,
        within: int | None = None) -> list[tuple[int, ...]] | None:
    """``count`` paths from ``x`` to distinct vertices of ``targets``, disjoint
    except at ``x`` and meeting ``targets`` only at their ends."""
    vs = (g.vertices if within is None else within) & ~(1 << x)
    found = disjoint_paths(g, g.adj[x] & vs, targets & ~(1 << x), count, vs)
    if found is None:
        return None
    return [(x,) + p for p in found]


def is_two_connected_rooted(g: Graph, x: int, y: int) -> bool:
    """``(G, x, y)`` is 2-connected iff ``G + xy`` is 2-connected."""
    h = g if g.has_edge(x, y) else g.with_edge(x, y)
    return vertex_connectivity_at_least(h, 2)


def rooted_min_degree(g: Graph, x: int, y: int) -> int:
    rest = g.vertices & ~(1 << x) & ~(1 << y)
    if not rest:
        return 0
    return min(g.degree(v) for v in bits(rest))


def steiner_closure_blocks(dec: BlockDecomposition, terminals: list[int]) -> list[int]:
    """Block indices of the minimal block-cut subtree spanning ``terminals``."""
    if not terminals:
        return []
    nodes = {("b", i) for i in range(len(dec.blocks))} | {("c", c) for c in bits(dec.cut_vertices)}
    nbrs: dict[tuple, set] = {node: set() for node in nodes}
    for i, c in dec.tree:
        nbrs[("b", i)].add(("c", c))
        nbrs[("c", c)].add(("b", i))
    keep = {("b", i) for i in terminals}
    alive = set(nodes)
    changed = True
    while changed:
        changed = False
        for node in sorted(alive):
            if node in keep:
                continue
            if len(nbrs[node] & alive) <= 1:
                alive.discard(node)
                changed = True
    return sorted(i for kind, i in alive if kind == "b")


def union(masks) -> int:
    out = 0
    for m in masks:
        out |= m
    return out


__all__ = [
    "BFSLayers", "BlockDecomposition", "Contraction", "K4Minus", "bfs_layers", "blocks",
    "contract", "disjoint_paths", "find_k4_minus", "has_triangle", "is_clique",
    "is_triangle_free", "is_two_connected_rooted", "mask_of", "max_clique_containing",
    "rooted_min_degree", "steiner_closure_blocks", "two_separators", "union",
    "vertex_connectivity_at_least",
]
