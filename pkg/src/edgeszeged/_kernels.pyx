# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same API as ``_kernels_py``.

Canonical labeling packs neighbourhoods into 64-bit words, so it accepts at
most 64 vertices; the dispatcher routes larger graphs to the Python kernel.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset

ctypedef unsigned long long u64

cdef extern from *:
    int popcount64 "__builtin_popcountll"(u64 x) nogil

MAX_CANON_N = 64


cdef int* _load_dist(dist, int n) except NULL:
    cdef int *d = <int*>malloc(n * n * sizeof(int) + 1)
    cdef int u, v
    if d == NULL:
        raise MemoryError()
    for u in range(n):
        row = dist[u]
        for v in range(n):
            d[u * n + v] = row[v]
    return d


cdef int* _load_edges(edges, int m) except NULL:
    cdef int *e = <int*>malloc(2 * m * sizeof(int) + 1)
    cdef int i
    if e == NULL:
        raise MemoryError()
    for i in range(m):
        a, b = edges[i]
        e[2 * i] = a
        e[2 * i + 1] = b
    return e


def distance_matrix(int n, neighbors):
    cdef int total = 0
    cdef int s, x, y, k, head, tail, dx
    cdef int *start = <int*>malloc((n + 1) * sizeof(int))
    cdef int *nbr
    cdef int *row = <int*>malloc(n * sizeof(int) + 1)
    cdef int *queue = <int*>malloc(n * sizeof(int) + 1)
    if start == NULL or row == NULL or queue == NULL:
        free(start); free(row); free(queue)
        raise MemoryError()
    for x in range(n):
        start[x] = total
        total += len(neighbors[x])
    start[n] = total
    nbr = <int*>malloc(total * sizeof(int) + 1)
    if nbr == NULL:
        free(start); free(row); free(queue)
        raise MemoryError()
    k = 0
    for x in range(n):
        for y in neighbors[x]:
            nbr[k] = y
            k += 1
    out = []
    try:
        for s in range(n):
            for x in range(n):
                row[x] = -1
            row[s] = 0
            queue[0] = s
            head = 0
            tail = 1
            while head < tail:
                x = queue[head]
                head += 1
                dx = row[x] + 1
                for k in range(start[x], start[x + 1]):
                    y = nbr[k]
                    if row[y] < 0:
                        row[y] = dx
                        queue[tail] = y
                        tail += 1
            out.append([row[x] for x in range(n)])
    finally:
        free(start); free(nbr); free(row); free(queue)
    return out


def wiener_sum(dist):
    cdef long long total = 0
    cdef int n = len(dist)
    cdef int u, v
    cdef int *d = _load_dist(dist, n)
    for u in range(n):
        for v in range(u + 1, n):
            total += d[u * n + v]
    free(d)
    return total


def edge_partitions(dist, edges):
    cdef int n = len(dist)
    cdef int m = len(edges)
    cdef int i, j, w, u, v, a, b, nu, nv, mu, mv, fu, fv
    cdef int *d = _load_dist(dist, n)
    cdef int *e
    cdef int *du
    cdef int *dv
    try:
        e = _load_edges(edges, m)
    except MemoryError:
        free(d)
        raise
    out = []
    for i in range(m):
        u = e[2 * i]
        v = e[2 * i + 1]
        du = d + u * n
        dv = d + v * n
        nu = 0
        nv = 0
        for w in range(n):
            if du[w] < dv[w]:
                nu += 1
            elif dv[w] < du[w]:
                nv += 1
        mu = 0
        mv = 0
        for j in range(m):
            a = e[2 * j]
            b = e[2 * j + 1]
            fu = du[a] if du[a] < du[b] else du[b]
            fv = dv[a] if dv[a] < dv[b] else dv[b]
            if fu < fv:
                mu += 1
            elif fv < fu:
                mv += 1
        out.append((nu, nv, n - nu - nv, mu, mv, m - mu - mv))
    free(d)
    free(e)
    return out


def edge_wiener_sum(dist, edges):
    cdef int n = len(dist)
    cdef int m = len(edges)
    cdef int i, j, a, b, x, y
    cdef long long total = 0
    cdef int *d = _load_dist(dist, n)
    cdef int *e
    cdef int *du
    cdef int *dv
    try:
        e = _load_edges(edges, m)
    except MemoryError:
        free(d)
        raise
    for i in range(m):
        du = d + e[2 * i] * n
        dv = d + e[2 * i + 1] * n
        for j in range(i + 1, m):
            a = e[2 * j]
            b = e[2 * j + 1]
            x = du[a] if du[a] < du[b] else du[b]
            y = dv[a] if dv[a] < dv[b] else dv[b]
            total += x if x < y else y
    free(d)
    free(e)
    return total


# -- canonical labeling -----------------------------------------------------
#
# A partition is stored as lab[0..n) (vertices, cells contiguous) and
# cend[0..n) with cend[p] = 1 when position p closes a cell.  Search level k
# owns the k-th slice of the lab/cend stacks.

cdef struct Ctx:
    int n
    u64 *masks
    int *lab
    int *cend
    int *tried
    int *sig
    int *cstart
    u64 *cmask
    u64 *cert
    u64 *best_cert
    int *best_lab
    int have_best


cdef int _sig_cmp(int *sig, int ncells, int v, int w) nogil:
    cdef int t
    for t in range(ncells):
        if sig[v * ncells + t] != sig[w * ncells + t]:
            return -1 if sig[v * ncells + t] < sig[w * ncells + t] else 1
    return 0


cdef void _refine(Ctx *c, int *lab, int *cend) nogil:
    cdef int n = c.n
    cdef int ncells, p, k, t, s, e, q, v, w, split
    cdef u64 mv
    while True:
        ncells = 0
        p = 0
        while p < n:
            c.cstart[ncells] = p
            c.cmask[ncells] = 0
            while True:
                c.cmask[ncells] |= (<u64>1) << lab[p]
                if cend[p]:
                    break
                p += 1
            p += 1
            ncells += 1
        c.cstart[ncells] = n
        split = 0
        for k in range(ncells):
            s = c.cstart[k]
            e = c.cstart[k + 1]
            if e - s == 1:
                continue
            for q in range(s, e):
                v = lab[q]
                mv = c.masks[v]
                for t in range(ncells):
                    c.sig[v * ncells + t] = popcount64(mv & c.cmask[t])
            # stable insertion sort of the cell by signature
            for q in range(s + 1, e):
                v = lab[q]
                p = q - 1
                while p >= s and _sig_cmp(c.sig, ncells, lab[p], v) > 0:
                    lab[p + 1] = lab[p]
                    p -= 1
                lab[p + 1] = v
            for q in range(s, e - 1):
                if _sig_cmp(c.sig, ncells, lab[q], lab[q + 1]) != 0:
                    cend[q] = 1
                    split = 1
        if not split:
            return


cdef void _search(Ctx *c, int level) nogil:
    cdef int n = c.n
    cdef int *lab = c.lab + level * n
    cdef int *cend = c.cend + level * n
    cdef int *clab
    cdef int *ccend
    cdef int *tried = c.tried + level * n
    cdef int ntried = 0
    cdef int s = 0
    cdef int e = -1
    cdef int p, q, i, j, v, w, skip, cmp
    cdef u64 col, mj, keep
    p = 0
    while p < n:
        q = p
        while not cend[q]:
            q += 1
        if q > p:
            s = p
            e = q
            break
        p = q + 1
    if e < 0:
        for j in range(1, n):
            mj = c.masks[lab[j]]
            col = 0
            for i in range(j):
                col = (col << 1) | ((mj >> lab[i]) & 1)
            c.cert[j] = col
        cmp = 0
        if c.have_best:
            for j in range(1, n):
                if c.cert[j] != c.best_cert[j]:
                    cmp = -1 if c.cert[j] < c.best_cert[j] else 1
                    break
        if not c.have_best or cmp < 0:
            c.have_best = 1
            memcpy(c.best_cert, c.cert, n * sizeof(u64))
            memcpy(c.best_lab, lab, n * sizeof(int))
        return
    clab = c.lab + (level + 1) * n
    ccend = c.cend + (level + 1) * n
    for q in range(s, e + 1):
        v = lab[q]
        skip = 0
        for i in range(ntried):
            w = tried[i]
            keep = ~(((<u64>1) << v) | ((<u64>1) << w))
            if (c.masks[v] & keep) == (c.masks[w] & keep):
                skip = 1
                break
        if skip:
            continue
        tried[ntried] = v
        ntried += 1
        memcpy(clab, lab, n * sizeof(int))
        memcpy(ccend, cend, n * sizeof(int))
        # move v to the front of its cell, keeping the others in order
        for p in range(q, s, -1):
            clab[p] = clab[p - 1]
        clab[s] = v
        ccend[s] = 1
        _refine(c, clab, ccend)
        _search(c, level + 1)


def canonical_labeling(int n, masks):
    if n == 0:
        return []
    if n > MAX_CANON_N:
        raise ValueError("compiled canonical labeling supports at most 64 vertices")
    cdef Ctx c
    cdef int i
    c.n = n
    c.have_best = 0
    c.masks = <u64*>malloc(n * sizeof(u64))
    c.lab = <int*>malloc((n + 1) * n * sizeof(int))
    c.cend = <int*>malloc((n + 1) * n * sizeof(int))
    c.tried = <int*>malloc((n + 1) * n * sizeof(int))
    c.sig = <int*>malloc(n * n * sizeof(int))
    c.cstart = <int*>malloc((n + 1) * sizeof(int))
    c.cmask = <u64*>malloc(n * sizeof(u64))
    c.cert = <u64*>malloc(n * sizeof(u64))
    c.best_cert = <u64*>malloc(n * sizeof(u64))
    c.best_lab = <int*>malloc(n * sizeof(int))
    try:
        if (c.masks == NULL or c.lab == NULL or c.cend == NULL or c.tried == NULL
                or c.sig == NULL or c.cstart == NULL or c.cmask == NULL
                or c.cert == NULL or c.best_cert == NULL or c.best_lab == NULL):
            raise MemoryError()
        for i in range(n):
            c.masks[i] = masks[i]
            c.lab[i] = i
            c.cend[i] = 0
        c.cend[n - 1] = 1
        with nogil:
            _refine(&c, c.lab, c.cend)
            _search(&c, 0)
        return [c.best_lab[i] for i in range(n)]
    finally:
        free(c.masks); free(c.lab); free(c.cend); free(c.tried); free(c.sig)
        free(c.cstart); free(c.cmask); free(c.cert); free(c.best_cert); free(c.best_lab)
