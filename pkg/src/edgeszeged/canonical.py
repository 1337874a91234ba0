"""Canonical forms for isomorphism testing.

Vertices are split into an ordered equitable partition (degree refinement
iterated to a fixed point), then the search individualises each vertex of
the first non-singleton cell in turn and refines again.  Among all discrete
partitions reached, the one with the lexicographically smallest adjacency
bit string wins.  Branches on twin vertices are skipped since transposing
twins is an automorphism.  The form is the graph6 encoding of the winning
relabelling, so it is itself a valid graph6 string.
"""

from __future__ import annotations

from . import kernels
from .graph import Graph
from .graph6 import encode_bits, graph6_decode


def canonical_labeling(g: Graph) -> list[int]:
    """``lab[i]`` is the vertex of ``g`` at canonical position ``i``."""
    return kernels.canonical_labeling(g.n, g.masks())


def canonical_form(g: Graph) -> bytes:
    lab = canonical_labeling(g)
    masks = g.masks()
    return encode_bits(g.n, lambda i, j: (masks[lab[j]] >> lab[i]) & 1)


def canonical_graph6(g: Graph) -> str:
    return canonical_form(g).decode("ascii")


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of the isomorphism class of ``g``."""
    return graph6_decode(canonical_form(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(map(len, g.neighbors)) != sorted(map(len, h.neighbors)):
        return False
    return canonical_form(g) == canonical_form(h)
