"""graph6 and plain edge-list interchange.

graph6 follows the published format: a size prefix (one byte for n <= 62,
``~`` plus 3 bytes up to 258047, ``~~`` plus 6 bytes beyond), then the upper
triangle ``x(0,1) x(0,2) x(1,2) x(0,3) ...`` packed six bits per byte, each
byte offset by 63.  The optional ``>>graph6<<`` header is accepted on input.

The edge-list format is a line ``n m`` followed by ``m`` lines ``u v``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .graph import Graph, GraphError

HEADER = ">>graph6<<"


class FormatError(GraphError):
    """Malformed graph6 or edge-list input."""


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    if n <= 68719476735:
        return bytes([126, 126] + [63 + (n >> s & 63) for s in (30, 24, 18, 12, 6, 0)])
    raise FormatError(f"graph6 cannot encode {n} vertices")


def encode_bits(n: int, bit_of) -> bytes:
    """graph6 bytes for ``n`` vertices where ``bit_of(i, j)`` gives pair i < j."""
    out = bytearray(_encode_n(n))
    acc = 0
    k = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | bit_of(i, j)
            k += 1
            if k == 6:
                out.append(acc + 63)
                acc = 0
                k = 0
    if k:
        out.append((acc << (6 - k)) + 63)
    return bytes(out)


def graph6_encode(g: Graph) -> str:
    masks = g.masks()
    return encode_bits(g.n, lambda i, j: (masks[j] >> i) & 1).decode("ascii")


def graph6_decode(text: str | bytes) -> Graph:
    if isinstance(text, str):
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError:
            raise FormatError("graph6 text must be ASCII") from None
    else:
        data = bytes(text)
    data = data.rstrip(b"\r\n")
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER):]
    if not data:
        raise FormatError("empty graph6 string")
    for c in data:
        if not 63 <= c <= 126:
            raise FormatError(f"invalid graph6 byte {c!r}")
    vals = [c - 63 for c in data]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise FormatError("truncated graph6 size field")
        n, pos = _unpack(vals[2:8]), 8
    else:
        if len(vals) < 4:
            raise FormatError("truncated graph6 size field")
        n, pos = _unpack(vals[1:4]), 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) < need:
        raise FormatError(f"truncated graph6 bit vector: expected {need} bytes, got {len(body)}")
    if len(body) > need:
        raise FormatError(f"trailing data after graph6 bit vector ({len(body) - need} bytes)")
    if n == 0:
        raise FormatError("graph6 string encodes the empty graph")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if need and body[-1] & ((1 << (need * 6 - nbits)) - 1):
        raise FormatError("nonzero graph6 padding bits")
    return Graph(n, edges)


def _unpack(vals) -> int:
    n = 0
    for x in vals:
        n = (n << 6) | x
    return n


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield graph6_decode(line)


def edgelist_encode(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_edgelists(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse one or more concatenated edge-list blocks; blank lines are skipped."""
    it = (ln.split() for ln in lines)
    it = (tok for tok in it if tok)
    for head in it:
        n, m = _ints(head, "header")
        edges = []
        for _ in range(m):
            tok = next(it, None)
            if tok is None:
                raise FormatError(f"edge list ended after {len(edges)} of {m} edges")
            edges.append(_ints(tok, "edge"))
        yield Graph(n, edges)


def _ints(tok: list[str], what: str) -> tuple[int, int]:
    if len(tok) != 2:
        raise FormatError(f"{what} line must hold two integers, got {' '.join(tok)!r}")
    try:
        return int(tok[0]), int(tok[1])
    except ValueError:
        raise FormatError(f"{what} line must hold two integers, got {' '.join(tok)!r}") from None


def edgelist_decode(text: str) -> Graph:
    graphs = list(read_edgelists(text.splitlines()))
    if len(graphs) != 1:
        raise FormatError(f"expected one edge-list graph, found {len(graphs)}")
    return graphs[0]
