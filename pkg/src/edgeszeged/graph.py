"""Simple undirected graphs on dense vertex ids ``0..n-1``."""

from __future__ import annotations

import enum
from collections.abc import Iterable

from . import kernels


class GraphError(ValueError):
    """Invalid graph construction or an operation outside its domain."""


class _Unreachable:
    """Marker for the distance between vertices in different components.

    Deliberately supports no arithmetic or ordering, so it can never leak
    into an index sum.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNREACHABLE"

    def __reduce__(self):
        return "UNREACHABLE"


UNREACHABLE = _Unreachable()


class Kind(enum.Enum):
    TREE = "tree"
    UNICYCLIC = "unicyclic"
    OTHER = "other"


class Graph:
    """Immutable simple graph.

    ``edges`` is the sorted tuple of pairs ``(u, v)`` with ``u < v``;
    ``neighbors[v]`` is the sorted tuple of neighbours of ``v``.
    """

    __slots__ = ("n", "edges", "neighbors", "_masks", "_dist")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, int) or n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {n!r}")
        seen = set()
        for pair in edges:
            try:
                u, v = pair
            except (TypeError, ValueError):
                raise GraphError(f"edge {pair!r} is not a vertex pair") from None
            if not (isinstance(u, int) and isinstance(v, int)):
                raise GraphError(f"edge {pair!r} has non-integer endpoints")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"edge ({u}, {v}) is a loop")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"edge ({u}, {v}) is a duplicate")
            seen.add(key)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in seen:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.n = n
        self.edges = tuple(sorted(seen))
        self.neighbors = tuple(tuple(sorted(x)) for x in nbrs)
        self._masks = None
        self._dist = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.neighbors[u]

    def masks(self) -> tuple[int, ...]:
        """Neighbourhood bitmask per vertex."""
        if self._masks is None:
            out = []
            for nb in self.neighbors:
                mask = 0
                for w in nb:
                    mask |= 1 << w
                out.append(mask)
            self._masks = tuple(out)
        return self._masks

    def raw_distances(self) -> list[list[int]]:
        """Kernel distance matrix with ``-1`` for unreachable pairs (shared, do not mutate)."""
        if self._dist is None:
            self._dist = kernels.distance_matrix(self.n, self.neighbors)
        return self._dist

    def relabel(self, perm) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"

    def __getstate__(self):
        return (self.n, self.edges)

    def __setstate__(self, state):
        n, edges = state
        self.__init__(n, edges)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


class DistanceTable:
    """Hop distances, with ``UNREACHABLE`` across components."""

    __slots__ = ("n", "_rows")

    def __init__(self, raw: list[list[int]]):
        self.n = len(raw)
        self._rows = tuple(_mark_row(r) for r in raw)

    def __getitem__(self, u: int) -> tuple:
        return self._rows[u]

    def __iter__(self):
        return iter(self._rows)

    def __len__(self):
        return self.n

    def distance(self, u: int, v: int):
        return self._rows[u][v]


def _mark_row(raw_row) -> tuple:
    return tuple(UNREACHABLE if x < 0 else x for x in raw_row)


def _check_vertex(g: Graph, v: int) -> None:
    if not (isinstance(v, int) and 0 <= v < g.n):
        raise GraphError(f"vertex {v!r} is not in 0..{g.n - 1}")


def bfs_distances(g: Graph, source: int) -> tuple:
    _check_vertex(g, source)
    return _mark_row(g.raw_distances()[source])


def distance_table(g: Graph) -> DistanceTable:
    return DistanceTable(g.raw_distances())


def is_connected(g: Graph) -> bool:
    return min(g.raw_distances()[0]) >= 0


def require_connected(g: Graph, what: str = "operation") -> list[list[int]]:
    dist = g.raw_distances()
    if min(dist[0]) < 0:
        raise GraphError(f"{what} requires a connected graph")
    return dist


def diameter(g: Graph) -> int:
    dist = require_connected(g, "diameter")
    return max(max(row) for row in dist)


def classify(g: Graph) -> Kind:
    if not is_connected(g):
        return Kind.OTHER
    if g.m == g.n - 1:
        return Kind.TREE
    if g.m == g.n:
        return Kind.UNICYCLIC
    return Kind.OTHER


def find_cycle(g: Graph) -> tuple[int, ...]:
    """The unique cycle of a unicyclic graph as ``(v_1, ..., v_g)``.

    Starts at the smallest cycle vertex and continues towards its smaller
    cycle neighbour, which is the lexicographically least rotation or
    reflection.
    """
    if classify(g) is not Kind.UNICYCLIC:
        raise GraphError("find_cycle requires a unicyclic graph")
    deg = [g.degree(v) for v in range(g.n)]
    alive = [True] * g.n
    stack = [v for v in range(g.n) if deg[v] == 1]
    while stack:
        v = stack.pop()
        alive[v] = False
        for w in g.neighbors[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    on_cycle = [v for v in range(g.n) if alive[v]]
    start = on_cycle[0]
    prev = start
    cur = min(w for w in g.neighbors[start] if alive[w])
    order = [start]
    while cur != start:
        order.append(cur)
        nxt = [w for w in g.neighbors[cur] if alive[w] and w != prev]
        prev, cur = cur, nxt[0]
    return tuple(order)


def girth_of_unicyclic(g: Graph) -> int:
    return len(find_cycle(g))
