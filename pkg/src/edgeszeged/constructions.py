"""Builders for the named graph families.

Labelings are fixed so outputs are reproducible:

* ``path(k)``: ``0 - 1 - ... - k-1``
* ``star(k)``: centre 0, leaves ``1..k-1``
* ``cycle(g)``: ``0 - 1 - ... - g-1 - 0``
* ``broom(l1, l2, a)``: root 0, first arm ``1..l1`` outward, second arm
  next, then the ``a`` pendants
* ``cycle_composition``: cycle vertices ``0..g-1`` carry the tree roots,
  then the non-root vertices of each tree in tree order
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .graph import Graph, GraphError, Kind, classify


@dataclass(frozen=True)
class RootedTree:
    graph: Graph
    root: int = 0

    def __post_init__(self):
        if not 0 <= self.root < self.graph.n:
            raise GraphError(f"root {self.root} is not a vertex of the tree")
        if classify(self.graph) is not Kind.TREE:
            raise GraphError("a rooted tree must be a tree")

    @property
    def order(self) -> int:
        return self.graph.n


def trivial_tree() -> RootedTree:
    return RootedTree(Graph(1))


def path(k: int) -> Graph:
    if k < 1:
        raise GraphError(f"path needs k >= 1, got {k}")
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def star(k: int) -> Graph:
    if k < 1:
        raise GraphError(f"star needs k >= 1, got {k}")
    return Graph(k, [(0, i) for i in range(1, k)])


def cycle(g: int) -> Graph:
    if g < 3:
        raise GraphError(f"cycle needs length >= 3, got {g}")
    return Graph(g, [(i, (i + 1) % g) for i in range(g)])


def broom(l1: int, l2: int, a: int) -> RootedTree:
    """Two arms of ``l1`` and ``l2`` edges and ``a`` pendants sharing root 0."""
    if min(l1, l2, a) < 0:
        raise GraphError("broom parameters must be nonnegative")
    edges = []
    nxt = 1
    for length in (l1, l2):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    for _ in range(a):
        edges.append((0, nxt))
        nxt += 1
    return RootedTree(Graph(nxt, edges), 0)


def cycle_composition(g: int, trees: Sequence[RootedTree]) -> Graph:
    """Cycle of length ``g`` with ``trees[i]`` hung at its i-th vertex by the root."""
    if g < 3:
        raise GraphError(f"cycle length must be >= 3, got {g}")
    if len(trees) != g:
        raise GraphError(f"need exactly {g} rooted trees, got {len(trees)}")
    edges = [(i, (i + 1) % g) for i in range(g)]
    nxt = g
    for i, t in enumerate(trees):
        name = {t.root: i}
        for v in range(t.graph.n):
            if v != t.root:
                name[v] = nxt
                nxt += 1
        edges.extend((name[u], name[v]) for u, v in t.graph.edges)
    return Graph(nxt, edges)


def extremal_unicyclic(n: int, d: int) -> Graph:
    """Triangle ``v1 v2 v3`` (vertices 0, 1, 2) with a broom at ``v1`` and a path at ``v2``.

    ``v1`` carries an arm of ``ceil((d-1)/2)`` edges plus ``n-d-2`` pendants,
    ``v2`` an arm of ``floor((d-1)/2)`` edges.  For ``d = 1`` this is the
    triangle and for ``d = 2, n >= 6`` the triangle with ``n - 3`` pendants
    at one vertex.
    """
    if d == 2 and n in (4, 5):
        other = "C_4" if n == 4 else "C_5"
        raise GraphError(
            f"U({n},2) has two members, {other} and the triangle with "
            f"{n - 3} pendant(s) at one vertex; no single extremal graph is defined"
        )
    if not ((d == 1 and n == 3) or (d == 2 and n >= 6) or (3 <= d <= n - 2)):
        raise GraphError(
            f"no unicyclic graph family for n={n}, d={d}: need d=1 with n=3, "
            f"d=2 with n>=6, or 3 <= d <= n-2"
        )
    up = d // 2  # ceil((d-1)/2)
    down = (d - 1) // 2
    return cycle_composition(3, [broom(up, 0, n - d - 2), broom(down, 0, 0), trivial_tree()])


def small_diameter_candidates(n: int) -> list[Graph]:
    """All unicyclic graphs of order ``n`` and diameter at most 2, as classified for ``n >= 3``."""
    if n < 3:
        raise GraphError(f"unicyclic graphs need n >= 3, got {n}")
    if n == 3:
        return [cycle(3)]
    pend = cycle_composition(3, [broom(1, 0, n - 4), trivial_tree(), trivial_tree()])
    if n in (4, 5):
        return [cycle(n), pend]
    return [pend]


def caterpillar_tree(n: int, d: int) -> Graph:
    """Path ``0..d`` with ``n-d-1`` pendants (``d+1..n-1``) at vertex ``d // 2``."""
    if not 2 <= d <= n - 1:
        raise GraphError(f"caterpillar needs 2 <= d <= n-1, got n={n}, d={d}")
    edges = [(i, i + 1) for i in range(d)]
    edges += [(d // 2, v) for v in range(d + 1, n)]
    return Graph(n, edges)
