"""Distance-based indices: Wiener, edge-Wiener, Szeged and edge-Szeged.

For an edge ``e = uv`` the vertices split into those strictly closer to
``u`` (``n_u``), strictly closer to ``v`` (``n_v``) and equidistant (``n_0``).
Edges split the same way using the edge-to-vertex distance
``d(f, w) = min(d(a, w), d(b, w))`` for ``f = ab``; ``e`` itself is at
distance 0 from both ends and is counted in ``m_0``.

All functions need a connected graph; the one-vertex graph has every index
equal to 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from . import kernels
from .graph import Graph, GraphError, require_connected


class VertexPartition(NamedTuple):
    n_u: int
    n_v: int
    n_0: int


class EdgePartition(NamedTuple):
    m_u: int
    m_v: int
    m_0: int


@dataclass(frozen=True)
class IndexReport:
    wiener: int
    edge_wiener: int
    szeged: int
    edge_szeged: int
    edges: tuple[tuple[int, int], ...]
    vertex_partitions: tuple[VertexPartition, ...]
    edge_partitions: tuple[EdgePartition, ...]

    def to_dict(self, per_edge: bool = True) -> dict:
        out = {
            "wiener": self.wiener,
            "edge_wiener": self.edge_wiener,
            "szeged": self.szeged,
            "edge_szeged": self.edge_szeged,
        }
        if per_edge:
            out["per_edge"] = [
                {"edge": list(e), **vp._asdict(), **ep._asdict()}
                for e, vp, ep in zip(self.edges, self.vertex_partitions, self.edge_partitions)
            ]
        return out


def _partitions(g: Graph, what: str):
    dist = require_connected(g, what)
    return kernels.edge_partitions(dist, g.edges)


def _oriented(g: Graph, e) -> tuple[int, int]:
    try:
        u, v = e
    except (TypeError, ValueError):
        raise GraphError(f"{e!r} is not a vertex pair") from None
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge of the graph")
    return u, v


def vertex_partition(g: Graph, e: tuple[int, int]) -> VertexPartition:
    """``(n_u, n_v, n_0)`` for ``e = (u, v)``, oriented as given."""
    u, v = _oriented(g, e)
    dist = require_connected(g, "vertex_partition")
    nu, nv, n0, *_ = _single(g, dist, u, v)
    return VertexPartition(nu, nv, n0)


def edge_partition(g: Graph, e: tuple[int, int]) -> EdgePartition:
    """``(m_u, m_v, m_0)`` for ``e = (u, v)``, oriented as given."""
    u, v = _oriented(g, e)
    dist = require_connected(g, "edge_partition")
    *_, mu, mv, m0 = _single(g, dist, u, v)
    return EdgePartition(mu, mv, m0)


def _single(g: Graph, dist, u: int, v: int):
    # partitions of the edge list with (u, v) in caller orientation
    for (a, b), part in zip(g.edges, kernels.edge_partitions(dist, g.edges)):
        if (a, b) == (u, v):
            return part
        if (a, b) == (v, u):
            nu, nv, n0, mu, mv, m0 = part
            return nv, nu, n0, mv, mu, m0
    raise GraphError(f"({u}, {v}) is not an edge of the graph")


def wiener(g: Graph) -> int:
    return kernels.wiener_sum(require_connected(g, "wiener"))


def edge_wiener(g: Graph) -> int:
    return kernels.edge_wiener_sum(require_connected(g, "edge_wiener"), g.edges)


def szeged(g: Graph) -> int:
    return sum(p[0] * p[1] for p in _partitions(g, "szeged"))


def edge_szeged(g: Graph) -> int:
    return sum(p[3] * p[4] for p in _partitions(g, "edge_szeged"))


def transmission(g: Graph, v: int) -> int:
    """Sum of distances from ``v`` to every vertex."""
    dist = require_connected(g, "transmission")
    if not (isinstance(v, int) and 0 <= v < g.n):
        raise GraphError(f"vertex {v!r} is not in 0..{g.n - 1}")
    return sum(dist[v])


def parity_delta(g: int) -> int:
    """1 for odd ``g``, 0 for even ``g``."""
    if g < 1:
        raise GraphError(f"parity_delta needs g >= 1, got {g}")
    return g & 1


def index_report(g: Graph) -> IndexReport:
    dist = require_connected(g, "index_report")
    parts = kernels.edge_partitions(dist, g.edges)
    return IndexReport(
        wiener=kernels.wiener_sum(dist),
        edge_wiener=kernels.edge_wiener_sum(dist, g.edges),
        szeged=sum(p[0] * p[1] for p in parts),
        edge_szeged=sum(p[3] * p[4] for p in parts),
        edges=g.edges,
        vertex_partitions=tuple(VertexPartition(*p[:3]) for p in parts),
        edge_partitions=tuple(EdgePartition(*p[3:]) for p in parts),
    )
