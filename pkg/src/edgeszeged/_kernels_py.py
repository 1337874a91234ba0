"""Pure-Python hot kernels.

Every function here has a twin with the same name and signature in the
compiled ``_kernels`` extension.  Inputs are plain Python sequences so that
both backends can be called interchangeably:

* ``neighbors`` -- one sequence of neighbour ids per vertex
* ``masks``     -- one int bitmask of neighbours per vertex
* ``dist``      -- square list of lists of hop counts, ``-1`` = unreachable
* ``edges``     -- sequence of ``(u, v)`` pairs
"""

from __future__ import annotations

from collections.abc import Sequence


def distance_matrix(n: int, neighbors: Sequence[Sequence[int]]) -> list[list[int]]:
    """All-pairs hop distances by one BFS per source."""
    dist = []
    for s in range(n):
        row = [-1] * n
        row[s] = 0
        frontier = [s]
        depth = 0
        while frontier:
            depth += 1
            nxt = []
            for x in frontier:
                for y in neighbors[x]:
                    if row[y] < 0:
                        row[y] = depth
                        nxt.append(y)
            frontier = nxt
        dist.append(row)
    return dist


def wiener_sum(dist: Sequence[Sequence[int]]) -> int:
    n = len(dist)
    total = 0
    for u in range(n):
        row = dist[u]
        for v in range(u + 1, n):
            total += row[v]
    return total


def edge_partitions(
    dist: Sequence[Sequence[int]], edges: Sequence[tuple[int, int]]
) -> list[tuple[int, int, int, int, int, int]]:
    """Per-edge ``(n_u, n_v, n_0, m_u, m_v, m_0)`` for every edge ``(u, v)``.

    The edge itself is at distance 0 from both endpoints and lands in m_0.
    """
    n = len(dist)
    m = len(edges)
    out = []
    for u, v in edges:
        du = dist[u]
        dv = dist[v]
        nu = nv = 0
        for w in range(n):
            a = du[w]
            b = dv[w]
            if a < b:
                nu += 1
            elif b < a:
                nv += 1
        mu = mv = 0
        for a, b in edges:
            fu = du[a] if du[a] < du[b] else du[b]
            fv = dv[a] if dv[a] < dv[b] else dv[b]
            if fu < fv:
                mu += 1
            elif fv < fu:
                mv += 1
        out.append((nu, nv, n - nu - nv, mu, mv, m - mu - mv))
    return out


def edge_wiener_sum(dist: Sequence[Sequence[int]], edges: Sequence[tuple[int, int]]) -> int:
    total = 0
    m = len(edges)
    for i in range(m):
        u, v = edges[i]
        du = dist[u]
        dv = dist[v]
        for j in range(i + 1, m):
            a, b = edges[j]
            total += min(du[a], du[b], dv[a], dv[b])
    return total


# -- canonical labeling -----------------------------------------------------


def _refine(masks: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    # Split cells by neighbour counts into every current cell until stable.
    # Sub-cells are ordered by their count vector, so the result depends on
    # structure only, never on vertex names.
    while True:
        cellmasks = []
        for c in cells:
            cm = 0
            for v in c:
                cm |= 1 << v
            cellmasks.append(cm)
        new = []
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                mv = masks[v]
                sig = tuple((mv & cm).bit_count() for cm in cellmasks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                new.append(groups[sig])
        if len(new) == len(cells):
            return new
        cells = new


def _certificate(masks: Sequence[int], lab: Sequence[int]) -> tuple[int, ...]:
    # Column j packs the pairs (i, j), i < j, of the relabelled upper
    # triangle with i = 0 most significant: comparing these tuples is the
    # same as comparing graph6 bit strings.
    cols = []
    for j in range(1, len(lab)):
        mj = masks[lab[j]]
        col = 0
        for i in range(j):
            col = (col << 1) | ((mj >> lab[i]) & 1)
        cols.append(col)
    return tuple(cols)


def _twins(masks: Sequence[int], v: int, w: int) -> bool:
    keep = ~((1 << v) | (1 << w))
    return (masks[v] & keep) == (masks[w] & keep)


def _search(masks, cells, best) -> None:
    for idx, cell in enumerate(cells):
        if len(cell) > 1:
            break
    else:
        lab = [c[0] for c in cells]
        cert = _certificate(masks, lab)
        if best[0] is None or cert < best[0]:
            best[0] = cert
            best[1] = lab
        return
    tried: list[int] = []
    for v in cell:
        # swapping two twins is an automorphism fixing everything else, so
        # their subtrees yield identical certificates
        if any(_twins(masks, v, w) for w in tried):
            continue
        tried.append(v)
        rest = [w for w in cell if w != v]
        child = cells[:idx] + [[v], rest] + cells[idx + 1 :]
        _search(masks, _refine(masks, child), best)


def canonical_labeling(n: int, masks: Sequence[int]) -> list[int]:
    """Vertex order minimising the adjacency bit string over the search tree.

    Returns ``lab`` with ``lab[i]`` the vertex placed at canonical position i.
    """
    if n == 0:
        return []
    best: list = [None, None]
    _search(masks, _refine(masks, [list(range(n))]), best)
    return best[1]
