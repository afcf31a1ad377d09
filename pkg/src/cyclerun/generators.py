"""Named graph families: cliques, cycles, H_k, G_{k,m}, Mycielski graphs."""

from __future__ import annotations

from itertools import combinations

from .errors import GraphError
from .graph import MAX_N, Graph


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete(n) needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2), allow_large=n > MAX_N)


def complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}`` with parts ``0..a-1`` and ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise GraphError("complete_bipartite(a, b) needs a, b >= 1")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle(n) needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path(n) needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def h_k(k: int) -> Graph:
    """Join of ``K_{k-2}`` (vertices ``0..k-3``) with ``C_5`` (``k-2..k+2``)."""
    if k < 3:
        raise GraphError("h_k needs k >= 3")
    clique = list(range(k - 2))
    ring = list(range(k - 2, k + 3))
    edges = list(combinations(clique, 2))
    edges += [(ring[i], ring[(i + 1) % 5]) for i in range(5)]
    edges += [(u, v) for u in clique for v in ring]
    return Graph.from_edges(k + 3, edges)


def g_km(k: int, m: int, split: tuple[int, int] | None = None) -> Graph:
    """Tightness example for the long-cycle lemma.

    ``X = 0..k-2`` is joined to every vertex of ``Y = Y_1 + Y_2``
    (``k-1..k+m-2``); ``x_1 = k+m-1`` sees ``Y_1``, ``x_2 = k+m`` sees ``Y_2``,
    and ``x_1 x_2`` is an edge. Default split is as balanced as possible.
    """
    if k < 3:
        raise GraphError("g_km needs k >= 3")
    if m < 2 * k:
        raise GraphError("g_km needs m >= 2k")
    if split is None:
        split = (m - m // 2, m // 2)
    y1, y2 = split
    if y1 < k or y2 < k or y1 + y2 != m:
        raise GraphError("split must have both parts >= k and sum to m")
    xs = list(range(k - 1))
    ys = list(range(k - 1, k - 1 + m))
    x1, x2 = k - 1 + m, k + m
    edges = [(x, y) for x in xs for y in ys]
    edges += [(y, x1) for y in ys[:y1]]
    edges += [(y, x2) for y in ys[y1:]]
    edges.append((x1, x2))
    return Graph.from_edges(k + m + 1, edges)


def mycielskian(g: Graph) -> Graph:
    """Mycielski construction: copies ``u_i`` of each ``v_i`` plus apex ``w``.

    ``v_i`` keep labels ``0..n-1``, ``u_i = n+i``, ``w = 2n``. Results above the
    vertex cap come back as large graphs.
    """
    n = g.n
    edges = list(g.edges())
    for a, b in g.edges():
        edges.append((n + a, b))
        edges.append((n + b, a))
    edges += [(n + i, 2 * n) for i in range(n)]
    return Graph.from_edges(2 * n + 1, edges, allow_large=2 * n + 1 > MAX_N)


def mycielski_graph(steps: int) -> Graph:
    """``steps``-fold Mycielskian of ``K_2``: chromatic number ``steps + 2``."""
    g = complete(2)
    for _ in range(steps):
        g = mycielskian(g)
    return g


def grotzsch() -> Graph:
    return mycielskian(cycle(5))


def wheel(spokes: int) -> Graph:
    """Hub ``0`` joined to the cycle ``1..spokes``."""
    rim = [(1 + i, 1 + (i + 1) % spokes) for i in range(spokes)]
    return Graph.from_edges(spokes + 1, rim + [(0, 1 + i) for i in range(spokes)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges, off = [], 0
    for h in graphs:
        edges += [(u + off, v + off) for u, v in h.edges()]
        off += h.n
    return Graph.from_edges(off, edges, allow_large=off > MAX_N)


FAMILIES = {
    "complete": (complete, 1),
    "bipartite": (complete_bipartite, 2),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "petersen": (petersen, 0),
    "hk": (h_k, 1),
    "gkm": (g_km, 2),
    "mycielski": (mycielski_graph, 1),
    "grotzsch": (grotzsch, 0),
    "wheel": (wheel, 1),
}
