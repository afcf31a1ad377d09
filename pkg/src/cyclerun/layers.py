"""Good/bad vertices of layer components and the five-colour layer scheme.

Even BFS layers use colours ``{1, 2, 3}``, odd layers ``{3, 4, 5}``. Bipartite
layer components use only the two private colours of their parity; in a
non-bipartite component the good vertices are restricted to the private
pair and only bad vertices may take the shared colour ``3``. A clash can
therefore only occur between two bad vertices on adjacent layers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chromatic import Coloring, color_with, is_colorable
from .errors import Budget, Finding, PreconditionError
from .graph import Graph, bits, popcount, two_coloring
from .structure import bfs_layers, blocks, is_triangle_free, steiner_closure_blocks, union

SHARED = 3
PRIVATE = {0: (1, 2), 1: (4, 5)}


@dataclass(frozen=True)
class GoodBadSplit:
    good: int
    bad: int


@dataclass(frozen=True)
class ConflictWitness:
    """Edge ``u v`` with ``u`` bad in a non-bipartite component ``h1`` of
    layer ``layer`` and ``v`` in a non-bipartite component ``h2`` of layer
    ``layer + 1``."""

    u: int
    v: int
    layer: int
    h1: int
    h2: int

    def to_dict(self) -> dict:
        return {"u": self.u, "v": self.v, "layer": self.layer,
                "h1": list(bits(self.h1)), "h2": list(bits(self.h2))}


def good_bad_split(g: Graph, component: int | None = None) -> GoodBadSplit:
    """Split a connected (sub)graph into good and bad vertices.

    Bad vertices span the smallest connected subgraph holding every
    2-connected block. A tree has no 2-connected block, so all its vertices
    are good.
    """
    vs = g.vertices if component is None else component
    if not g.is_connected(vs):
        raise PreconditionError("good_bad_split needs a connected component")
    sub = g.induced(vs)
    dec = blocks(sub.graph)
    terminals = [i for i, b in enumerate(dec.blocks) if popcount(b) >= 3]
    bad = union(dec.blocks[i] for i in steiner_closure_blocks(dec, terminals))
    bad = sub.lift_mask(bad)
    return GoodBadSplit(vs & ~bad, bad)


def layer_palettes(g: Graph, root: int = 0) -> tuple[list[int], list[tuple[int, int, int]]]:
    """Per-vertex allowed colours (bitmask) and ``(layer, component, bad)`` triples."""
    bfs = bfs_layers(g, root)
    palettes = [0] * g.n
    parts = []
    for i, layer in enumerate(bfs.layers):
        a, b = PRIVATE[i % 2]
        pair = (1 << a) | (1 << b)
        for comp in g.components(layer):
            if two_coloring(g, comp) is not None:
                bad = 0
                for v in bits(comp):
                    palettes[v] = pair
            else:
                bad = good_bad_split(g, comp).bad
                for v in bits(comp):
                    palettes[v] = pair | (1 << SHARED) if bad >> v & 1 else pair
            parts.append((i, comp, bad))
    return palettes, parts


def attempt_layer_coloring(g: Graph, root: int = 0,
                           budget: Budget | float | None = None) -> Coloring | ConflictWitness:
    """Build the layer colouring; return it if proper, else the first clash.

    Raises :class:`Finding` if some non-bipartite layer component cannot be
    3-coloured within its palettes (the caller guarantees every layer
    component is 3-colourable).
    """
    if not is_triangle_free(g):
        raise PreconditionError("attempt_layer_coloring needs a triangle-free graph")
    budget = Budget.of(budget)
    palettes, parts = layer_palettes(g, root)
    colors = [0] * g.n
    layer_of = [0] * g.n
    comp_of = [0] * g.n
    for i, comp, bad in parts:
        for v in bits(comp):
            layer_of[v] = i
            comp_of[v] = comp
        a, b = PRIVATE[i % 2]
        if not bad:
            side = two_coloring(g, comp)
            for v in bits(comp):
                colors[v] = a if side[v] == 0 else b
            continue
        sub = g.induced(comp)
        local = [palettes[v] for v in sub.labels]
        found = color_with(sub.graph, 5, palettes=local, budget=budget)
        if found is None:
            if not is_colorable(sub.graph, 3, budget):
                raise PreconditionError(f"layer {i} has a component with chromatic number above 3")
            raise Finding("layer component admits no palette-respecting 3-colouring",
                          layer=i, component=list(bits(comp)))
        for idx, v in enumerate(sub.labels):
            colors[v] = found[idx]
    for u, v in g.edges():
        if colors[u] != colors[v]:
            continue
        if layer_of[u] == layer_of[v]:
            raise Finding("palette colouring clashes inside a layer", edge=(u, v))
        if layer_of[u] > layer_of[v]:
            u, v = v, u
        return ConflictWitness(u, v, layer_of[u], comp_of[u], comp_of[v])
    return Coloring(tuple(colors))


def witness_is_valid(g: Graph, root: int, w: ConflictWitness) -> bool:
    """Re-derive the witness conditions from scratch."""
    bfs = bfs_layers(g, root)
    if not g.has_edge(w.u, w.v) or w.layer < 1 or w.layer + 1 >= len(bfs.layers):
        return False
    if bfs.depth[w.u] != w.layer or bfs.depth[w.v] != w.layer + 1:
        return False
    comps_i = g.components(bfs.layers[w.layer])
    comps_j = g.components(bfs.layers[w.layer + 1])
    if w.h1 not in comps_i or w.h2 not in comps_j:
        return False
    if not (w.h1 >> w.u & 1 and w.h2 >> w.v & 1):
        return False
    if two_coloring(g, w.h1) is not None or two_coloring(g, w.h2) is not None:
        return False
    return bool(good_bad_split(g, w.h1).bad >> w.u & 1)


__all__ = ["ConflictWitness", "GoodBadSplit", "attempt_layer_coloring", "good_bad_split",
           "layer_palettes", "witness_is_valid"]
