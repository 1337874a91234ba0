"""Structure of unicyclic graphs.

A unicyclic graph is a cycle ``v_1 ... v_r`` with a rooted tree ``T_i``
hanging at each ``v_i``.  This module splits a graph into that form and
implements the closed-form edge-Szeged expression, the move that gathers
every tree onto ``v_1``, the edge-count shift caused by gluing a graph at a
vertex, and the cycle distance profile table.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import RootedTree
from .graph import Graph, GraphError, find_cycle, require_connected
from .invariants import edge_partition, szeged, transmission


@dataclass(frozen=True)
class UnicyclicDecomposition:
    """``trees[i]`` hangs at ``cycle[i]``; ``vertex_maps[i][k]`` is the
    original id of vertex ``k`` of ``trees[i]`` (root 0 maps to ``cycle[i]``)."""

    cycle: tuple[int, ...]
    trees: tuple[RootedTree, ...]
    vertex_maps: tuple[tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return len(self.cycle)

    @property
    def tree_orders(self) -> tuple[int, ...]:
        return tuple(t.order for t in self.trees)

    def to_dict(self) -> dict:
        return {
            "cycle_length": self.r,
            "cycle": list(self.cycle),
            "tree_orders": list(self.tree_orders),
        }


def decompose(g: Graph) -> UnicyclicDecomposition:
    cyc = find_cycle(g)
    on_cycle = set(cyc)
    trees = []
    maps = []
    for v in cyc:
        order = [v]
        index = {v: 0}
        edges = []
        head = 0
        while head < len(order):
            x = order[head]
            head += 1
            for y in g.neighbors[x]:
                if y in on_cycle or y in index:
                    continue
                index[y] = len(order)
                order.append(y)
                edges.append((index[x], index[y]))
        trees.append(RootedTree(Graph(len(order), edges), 0))
        maps.append(tuple(order))
    return UnicyclicDecomposition(cyc, tuple(trees), tuple(maps))


def edge_szeged_formula(g: Graph) -> int:
    """Edge-Szeged index from the Szeged index and the root transmissions.

    ``Sz(G) + sum D(v_i | T_i) - n^2 + (n r if r is odd else r)``.
    """
    dec = decompose(g)
    n, r = g.n, dec.r
    root_sum = sum(transmission(t.graph, t.root) for t in dec.trees)
    return szeged(g) + root_sum - n * n + (n * r if r % 2 else r)


def consolidate_to_v1(g: Graph) -> Graph:
    """Re-hang every tree attached at ``v_2 ... v_r`` onto ``v_1``.

    ``v_1`` is the first vertex reported by ``find_cycle``.  Vertex names are
    kept; each edge ``w v_i`` leaving the cycle becomes ``w v_1``.
    """
    cyc = find_cycle(g)
    on_cycle = set(cyc)
    v1 = cyc[0]
    edges = []
    for u, v in g.edges:
        if u in on_cycle and v in on_cycle:
            edges.append((u, v))
        elif u in on_cycle and u != v1:
            edges.append((v1, v))
        elif v in on_cycle and v != v1:
            edges.append((u, v1))
        else:
            edges.append((u, v))
    return Graph(g.n, edges)


def attach_at_vertex(g0: Graph, u: int, g1: Graph, root: int) -> Graph:
    """Glue ``g1`` onto ``g0`` by identifying ``root`` of ``g1`` with ``u``.

    Vertices of ``g0`` keep their names; the rest of ``g1`` follows in order.
    """
    if not 0 <= u < g0.n:
        raise GraphError(f"vertex {u} is not in g0")
    if not 0 <= root < g1.n:
        raise GraphError(f"vertex {root} is not in g1")
    name = {root: u}
    nxt = g0.n
    for v in range(g1.n):
        if v != root:
            name[v] = nxt
            nxt += 1
    return Graph(nxt, list(g0.edges) + [(name[a], name[b]) for a, b in g1.edges])


def composition_m_count(
    g0: Graph, g1_edge_count: int, u: int, e: tuple[int, int]
) -> tuple[int, int]:
    """Predicted ``(m_w1, m_w2)`` for ``e = (w1, w2)`` after gluing any
    connected graph with ``g1_edge_count`` edges onto ``g0`` at ``u``.

    Every glued edge sits on the same side of ``e`` as ``u``, so a side
    gains ``g1_edge_count`` edges exactly when ``u`` is strictly closer to it.
    """
    if g1_edge_count < 0:
        raise GraphError("edge count must be nonnegative")
    dist = require_connected(g0, "composition_m_count")
    if not (isinstance(u, int) and 0 <= u < g0.n):
        raise GraphError(f"vertex {u!r} is not in g0")
    ep = edge_partition(g0, e)
    w1, w2 = e
    d1, d2 = dist[u][w1], dist[u][w2]
    return (
        ep.m_u + (g1_edge_count if d1 < d2 else 0),
        ep.m_v + (g1_edge_count if d2 < d1 else 0),
    )


def cycle_distance_profile(g: int, j: int) -> tuple[int, int]:
    """``(d(v_2, v_j) - d(v_1, v_j) + 1, d(v_g, v_j) - d(v_1, v_j) + 1)`` on ``C_g``.

    Read off the closed case table; valid for ``2 <= j <= g - 1``.
    """
    if g < 3:
        raise GraphError(f"cycle length must be >= 3, got {g}")
    if not 2 <= j <= g - 1:
        raise GraphError(f"j must lie in 2..{g - 1}, got {j}")
    if g % 2 == 0:
        half = g // 2
        if j <= half:
            return (0, 2)
        if j == half + 1:
            return (0, 0)
        return (2, 0)
    if j <= (g - 1) // 2:
        return (0, 2)
    if j == (g + 1) // 2:
        return (0, 1)
    if j == (g + 3) // 2:
        return (1, 0)
    return (2, 0)
