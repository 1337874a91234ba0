"""Isomorphism-free generation of rooted trees, free trees and unicyclic graphs.

Rooted trees come from level sequences: the depths of the vertices in a
preorder walk that visits larger subtrees first, which makes the sequence
lexicographically maximal for its class.  Successors are produced in
decreasing lexicographic order, from the path ``0 1 2 ...`` down to the star
``0 1 1 ...``.

Free trees are grown around their centre: a central vertex is a rooted tree
in which at least two root branches reach the full height, and a central
edge joins two rooted trees of equal height, taken as an unordered pair.

A unicyclic graph is a cycle with one rooted tree per cycle vertex, so its
isomorphism class is a sequence of rooted-tree classes up to rotation and
reflection.  Only the lexicographically least sequence of each orbit is
built.
"""

from __future__ import annotations

from collections.abc import Iterator
from functools import lru_cache

from .canonical import canonical_form
from .constructions import RootedTree, cycle_composition
from .graph import Graph, GraphError, diameter

LevelSequence = tuple[int, ...]


def level_sequences(k: int) -> Iterator[LevelSequence]:
    """Canonical level sequences of all rooted trees on ``k`` vertices."""
    if k < 1:
        raise GraphError(f"rooted trees need k >= 1, got {k}")
    seq = list(range(k))
    while True:
        yield tuple(seq)
        p = k - 1
        while p > 0 and seq[p] <= 1:
            p -= 1
        if p == 0:
            return
        q = p - 1
        while seq[q] != seq[p] - 1:
            q -= 1
        shift = p - q
        for i in range(p, k):
            seq[i] = seq[i - shift]


@lru_cache(maxsize=None)
def _levels(k: int) -> tuple[LevelSequence, ...]:
    return tuple(level_sequences(k))


def tree_from_levels(levels: LevelSequence) -> Graph:
    """Vertex ``i`` is the i-th entry; its parent is the nearest earlier entry one level up."""
    if not levels or levels[0] != 0:
        raise GraphError("a level sequence starts with the root at depth 0")
    last_at = [0]
    edges = []
    for i in range(1, len(levels)):
        depth = levels[i]
        if not 1 <= depth <= levels[i - 1] + 1:
            raise GraphError(f"invalid level sequence {levels!r}")
        del last_at[depth:]
        edges.append((last_at[depth - 1], i))
        last_at.append(i)
    return Graph(len(levels), edges)


def rooted_trees(k: int) -> Iterator[RootedTree]:
    for levels in level_sequences(k):
        yield RootedTree(tree_from_levels(levels), 0)


def _full_height_branches(levels: LevelSequence, h: int) -> int:
    count = 0
    reached = False
    for depth in levels[1:]:
        if depth == 1:
            reached = False
        if depth == h and not reached:
            reached = True
            count += 1
    return count


def _join(a: LevelSequence, b: LevelSequence) -> Graph:
    ga = tree_from_levels(a)
    gb = tree_from_levels(b)
    off = len(a)
    return Graph(off + len(b), list(ga.edges) + [(u + off, v + off) for u, v in gb.edges] + [(0, off)])


def _free_trees(n: int) -> Iterator[Graph]:
    if n <= 2:
        yield Graph(n, [(0, 1)] if n == 2 else [])
        return
    for levels in _levels(n):
        h = max(levels)
        if _full_height_branches(levels, h) >= 2:
            yield tree_from_levels(levels)
    for a in range(1, n // 2 + 1):
        b = n - a
        left = _levels(a)
        right = _levels(b)
        for i, la in enumerate(left):
            ha = max(la)
            start = i if a == b else 0
            for lb in right[start:]:
                if max(lb) == ha:
                    yield _join(la, lb)


def free_trees(n: int, d: int | None = None) -> Iterator[Graph]:
    """One tree per isomorphism class of order ``n``, optionally of diameter ``d``."""
    if n < 1:
        raise GraphError(f"trees need n >= 1, got {n}")
    if d is not None and not (n == 1 and d == 0) and not 1 <= d <= n - 1:
        raise GraphError(f"tree diameter must lie in 1..{n - 1}, got {d}")
    for t in _free_trees(n):
        if d is None or diameter(t) == d:
            yield t


@lru_cache(maxsize=None)
def _catalogue(max_size: int):
    # every rooted tree of order <= max_size, ranked by (order, generation order)
    trees = []
    sizes = []
    for k in range(1, max_size + 1):
        for levels in _levels(k):
            trees.append(RootedTree(tree_from_levels(levels), 0))
            sizes.append(k)
    return tuple(trees), tuple(sizes)


def _dihedral_least(seq: tuple[int, ...]) -> bool:
    g = len(seq)
    rev = seq[::-1]
    for s in range(g):
        if seq[s:] + seq[:s] < seq or rev[s:] + rev[:s] < seq:
            return False
    return True


def tree_sequences(n: int, g: int) -> Iterator[tuple[int, ...]]:
    """Dihedrally least rank sequences of ``g`` rooted trees with total order ``n``.

    Ranks index the catalogue returned by ``rooted_tree_catalogue(n - g + 1)``.
    """
    spare = n - g
    trees, sizes = _catalogue(spare + 1)
    ranks = range(len(trees))
    seq = [0] * g

    def fill(pos, left, lo):
        # left: vertices still to place over positions pos..g-1
        if pos == g:
            if left == 0 and _dihedral_least(tuple(seq)):
                yield tuple(seq)
            return
        room = left - (g - pos - 1)
        for r in ranks[lo:]:
            s = sizes[r]
            if s > room:
                break
            if pos == g - 1 and s != left:
                continue
            seq[pos] = r
            yield from fill(pos + 1, left - s, lo)

    for first in ranks:
        if sizes[first] > spare + 1:
            break
        seq[0] = first
        # the first entry is the minimum of a least rotation
        yield from fill(1, n - sizes[first], first)


def rooted_tree_catalogue(max_size: int) -> tuple[RootedTree, ...]:
    return _catalogue(max_size)[0]


def unicyclic_graphs(n: int, d: int | None = None, girth: int | None = None) -> Iterator[Graph]:
    """One unicyclic graph per isomorphism class of order ``n``.

    Optional filters keep only diameter ``d`` and/or cycle length ``girth``.
    """
    if n < 3:
        raise GraphError(f"unicyclic graphs need n >= 3, got {n}")
    if girth is not None and not 3 <= girth <= n:
        raise GraphError(f"girth must lie in 3..{n}, got {girth}")
    seen: set[bytes] = set()
    girths = [girth] if girth is not None else range(3, n + 1)
    for g in girths:
        trees = rooted_tree_catalogue(n - g + 1)
        for seq in tree_sequences(n, g):
            graph = cycle_composition(g, [trees[r] for r in seq])
            if d is not None and diameter(graph) != d:
                continue
            key = canonical_form(graph)
            if key in seen:
                continue
            seen.add(key)
            yield graph
