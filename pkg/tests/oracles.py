"""Brute-force reference computations, independent of the package kernels.

Nothing here calls into ``edgeszeged`` beyond reading ``Graph.n`` and
``Graph.edges`` (and ``canonical_form`` for deduplicating labeled
enumerations, as the brute-force counts require).
"""

from __future__ import annotations

import itertools

INF = float("inf")


def floyd_warshall(n, edges):
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        dk = d[k]
        for i in range(n):
            di = d[i]
            dik = di[k]
            if dik == INF:
                continue
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return d


def connected(n, edges):
    return all(x < INF for x in floyd_warshall(n, edges)[0])


def wiener(n, edges):
    d = floyd_warshall(n, edges)
    return sum(d[i][j] for i in range(n) for j in range(i + 1, n))


def _edge_vertex(d, f, w):
    a, b = f
    return min(d[a][w], d[b][w])


def vertex_split(n, edges, e):
    d = floyd_warshall(n, edges)
    u, v = e
    nu = sum(1 for w in range(n) if d[u][w] < d[v][w])
    nv = sum(1 for w in range(n) if d[v][w] < d[u][w])
    n0 = sum(1 for w in range(n) if d[u][w] == d[v][w])
    return nu, nv, n0


def edge_split(n, edges, e):
    d = floyd_warshall(n, edges)
    u, v = e
    mu = sum(1 for f in edges if _edge_vertex(d, f, u) < _edge_vertex(d, f, v))
    mv = sum(1 for f in edges if _edge_vertex(d, f, v) < _edge_vertex(d, f, u))
    m0 = sum(1 for f in edges if _edge_vertex(d, f, u) == _edge_vertex(d, f, v))
    return mu, mv, m0


def szeged(n, edges):
    total = 0
    for e in edges:
        nu, nv, _ = vertex_split(n, edges, e)
        total += nu * nv
    return total


def edge_szeged(n, edges):
    total = 0
    for e in edges:
        mu, mv, _ = edge_split(n, edges, e)
        total += mu * mv
    return total


def edge_wiener(n, edges):
    d = floyd_warshall(n, edges)
    total = 0
    for e, f in itertools.combinations(edges, 2):
        u, v = e
        total += min(_edge_vertex(d, f, u), _edge_vertex(d, f, v))
    return total


def isomorphic(n1, edges1, n2, edges2):
    """Search all bijections for one that maps the edge sets onto each other."""
    if n1 != n2 or len(edges1) != len(edges2):
        return False
    target = {frozenset(e) for e in edges2}
    deg1 = sorted(sum(1 for e in edges1 if v in e) for v in range(n1))
    deg2 = sorted(sum(1 for e in edges2 if v in e) for v in range(n2))
    if deg1 != deg2:
        return False
    for perm in itertools.permutations(range(n1)):
        if all(frozenset((perm[u], perm[v])) in target for u, v in edges1):
            return True
    return False


def labeled_graphs_with_edges(n, m):
    """All labeled connected graphs on ``n`` vertices with exactly ``m`` edges."""
    pairs = list(itertools.combinations(range(n), 2))
    for subset in itertools.combinations(pairs, m):
        if _union_find_connected(n, subset):
            yield subset


def _union_find_connected(n, edges):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    parts = n
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            parts -= 1
    return parts == 1


def cycle_profile(g, j):
    """``(d(v2,vj) - d(v1,vj) + 1, d(vg,vj) - d(v1,vj) + 1)`` on ``C_g`` from shortest paths."""
    edges = [(i, (i + 1) % g) for i in range(g)]
    d = floyd_warshall(g, edges)
    v1, v2, vg, vj = 0, 1, g - 1, j - 1
    return d[v2][vj] - d[v1][vj] + 1, d[vg][vj] - d[v1][vj] + 1
