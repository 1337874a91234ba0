"""Exhaustive verification sweeps.

Each check enumerates a finite family and compares two independent
computations, collecting graph6 counterexamples.  Reports are deterministic
apart from ``duration_ms``.
"""

from __future__ import annotations

import time
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from . import kernels
from .canonical import canonical_form, canonical_graph6
from .constructions import caterpillar_tree, cycle, extremal_unicyclic, small_diameter_candidates
from .enumeration import free_trees, unicyclic_graphs
from .graph import Graph, GraphError, Kind, classify, is_connected
from .graph6 import graph6_decode, graph6_encode
from .invariants import edge_szeged, edge_wiener, szeged, wiener
from .unicyclic import (
    attach_at_vertex,
    composition_m_count,
    consolidate_to_v1,
    cycle_distance_profile,
    edge_szeged_formula,
)

MAX_COUNTEREXAMPLES = 20
GLUE_ORDER = 4

NAMED_CHECKS = ("2.1", "2.2", "2.3", "2.4", "2.5", "2.6", "sz-ge-we")


@dataclass(frozen=True)
class ExtremalResult:
    n: int
    d: int
    family_size: int
    minimum: int
    minimizers: tuple[str, ...]
    matches_construction: bool | None
    unique: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "family_size": self.family_size,
            "minimum": self.minimum,
            "minimizers": list(self.minimizers),
            "matches_construction": self.matches_construction,
            "unique": self.unique,
        }


@dataclass
class VerificationReport:
    check: str
    params: dict
    passed: bool
    counterexamples: list[str] = field(default_factory=list)
    duration_ms: float = 0.0
    details: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "pass": self.passed,
            "counterexamples": self.counterexamples,
            "duration_ms": round(self.duration_ms, 3),
        }


class _Sweep:
    def __init__(self, check: str, params: dict):
        self.report = VerificationReport(check, params, True)
        self._t0 = time.perf_counter()

    def fail(self, g: Graph | str) -> None:
        self.report.passed = False
        if len(self.report.counterexamples) < MAX_COUNTEREXAMPLES:
            self.report.counterexamples.append(g if isinstance(g, str) else graph6_encode(g))

    def done(self) -> VerificationReport:
        self.report.duration_ms = (time.perf_counter() - self._t0) * 1000.0
        return self.report


def min_edge_szeged(n: int, d: int) -> ExtremalResult:
    """Minimum edge-Szeged index over unicyclic graphs of order ``n`` and diameter ``d``."""
    if not 1 <= d <= n - 2:
        raise GraphError(f"no unicyclic graph of order {n} has diameter {d} (need 1 <= d <= n-2)")
    best = None
    argmin: list[str] = []
    size = 0
    for g in unicyclic_graphs(n, d):
        size += 1
        value = edge_szeged(g)
        if best is None or value < best:
            best, argmin = value, [canonical_graph6(g)]
        elif value == best:
            argmin.append(canonical_graph6(g))
    if best is None:
        raise GraphError(f"the family of unicyclic graphs with n={n}, d={d} is empty")
    argmin.sort()
    try:
        target = canonical_graph6(extremal_unicyclic(n, d))
    except GraphError:
        matches = None
    else:
        matches = argmin == [target]
    return ExtremalResult(n, d, size, best, tuple(argmin), matches, len(argmin) == 1)


def _extremal_cell(args) -> tuple[ExtremalResult, str]:
    n, d, construct = args
    res = min_edge_szeged(n, d)
    return res, canonical_graph6(construct(n, d))


def verify_theorem1(
    n_min: int = 6,
    n_max: int = 10,
    d_values: Iterable[int] | None = None,
    construct: Callable[[int, int], Graph] = extremal_unicyclic,
    workers: int = 1,
) -> VerificationReport:
    """Unique edge-Szeged minimiser of every family ``U(n, d)``, ``3 <= d <= n-2``,
    isomorphic to ``construct(n, d)``.

    ``d_values`` restricts the diameters swept; invalid ones are skipped.
    """
    wanted = None if d_values is None else sorted(set(d_values))
    sweep = _Sweep("unique-minimiser", {"n_min": n_min, "n_max": n_max, "d_values": wanted})
    cells = [
        (n, d, construct)
        for n in range(n_min, n_max + 1)
        for d in range(3, n - 1)
        if wanted is None or d in wanted
    ]
    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_extremal_cell, cells))
    else:
        results = [_extremal_cell(c) for c in cells]
    for res, target in results:
        ok = res.unique and list(res.minimizers) == [target]
        row = res.to_dict()
        row["pass"] = ok
        sweep.report.details.append(row)
        if not ok:
            for g6 in res.minimizers:
                sweep.fail(g6)
    return sweep.done()


def verify_lemma(name: str, n_max: int, n_min: int | None = None) -> VerificationReport:
    """Exhaustive sweep for one named identity; see ``NAMED_CHECKS`` for the names."""
    try:
        check = _NAMED_CHECKS[name]
    except KeyError:
        raise GraphError(f"unknown check {name!r}; choose from {', '.join(NAMED_CHECKS)}") from None
    return check(n_max, n_min)


def _closed_form(n_max, n_min):
    lo = 3 if n_min is None else max(3, n_min)
    sweep = _Sweep("closed-form", {"n_min": lo, "n_max": n_max})
    for n in range(lo, n_max + 1):
        count = 0
        for g in unicyclic_graphs(n):
            count += 1
            if edge_szeged_formula(g) != edge_szeged(g):
                sweep.fail(g)
        sweep.report.details.append({"n": n, "graphs": count})
    return sweep.done()


def _glue_shift(n_max, n_min):
    # G0 over connected graphs of order n_min..n_max, glued graphs over all
    # connected graphs with at most GLUE_ORDER vertices at every root
    lo = 2 if n_min is None else max(2, n_min)
    sweep = _Sweep("glue-shift", {"n_min": lo, "n_max": n_max, "glue_order": GLUE_ORDER})
    by_size: dict[int, list[tuple[Graph, int]]] = {}
    for k in range(1, GLUE_ORDER + 1):
        for h in connected_graphs(k):
            for root in range(h.n):
                by_size.setdefault(h.m, []).append((h, root))
    for n in range(lo, n_max + 1):
        for g0 in connected_graphs(n):
            for u in range(g0.n):
                for m1, glued in sorted(by_size.items()):
                    sums = set()
                    for h, root in glued:
                        g = attach_at_vertex(g0, u, h, root)
                        parts = dict(zip(g.edges, kernels.edge_partitions(g.raw_distances(), g.edges)))
                        total = 0
                        for e in g0.edges:
                            mu, mv = parts[e][3:5]
                            if (mu, mv) != composition_m_count(g0, m1, u, e):
                                sweep.fail(g)
                            total += mu * mv
                        sums.add(total)
                    if len(sums) > 1:
                        sweep.fail(g0)
    return sweep.done()


def _consolidation(n_max, n_min):
    lo = 3 if n_min is None else max(3, n_min)
    sweep = _Sweep("consolidation", {"n_min": lo, "n_max": n_max})
    for n in range(lo, n_max + 1):
        strict = equal = 0
        for g in unicyclic_graphs(n):
            h = consolidate_to_v1(g)
            before, after = edge_szeged(g), edge_szeged(h)
            same = canonical_form(g) == canonical_form(h)
            if after > before or (after == before) != same:
                sweep.fail(g)
            if same:
                equal += 1
            else:
                strict += 1
        sweep.report.details.append({"n": n, "end_block": equal, "strict_decrease": strict})
    return sweep.done()


def _tree_identities(n_max, n_min):
    lo = 1 if n_min is None else max(1, n_min)
    sweep = _Sweep("tree-identities", {"n_min": lo, "n_max": n_max})
    for n in range(lo, n_max + 1):
        for t in free_trees(n):
            sz, sze = szeged(t), edge_szeged(t)
            if sze != sz - (n - 1) ** 2 or wiener(t) != sz or edge_wiener(t) != sze:
                sweep.fail(t)
    return sweep.done()


def _min_wiener_tree(n_max, n_min):
    lo = 4 if n_min is None else max(4, n_min)
    sweep = _Sweep("min-wiener-tree", {"n_min": lo, "n_max": n_max})
    for n in range(lo, n_max + 1):
        for d in range(2, n - 1):
            target = wiener(caterpillar_tree(n, d))
            best = min(wiener(t) for t in free_trees(n, d))
            sweep.report.details.append({"n": n, "d": d, "min_wiener": best, "caterpillar": target})
            if target != best:
                sweep.fail(caterpillar_tree(n, d))
    return sweep.done()


def _cycle_profile(n_max, n_min):
    lo = 3 if n_min is None else max(3, n_min)
    sweep = _Sweep("cycle-profile", {"g_min": lo, "g_max": n_max})
    for g in range(lo, n_max + 1):
        c = cycle(g)
        dist = c.raw_distances()
        # v_i is vertex i - 1
        for j in range(2, g):
            direct = (
                dist[1][j - 1] - dist[0][j - 1] + 1,
                dist[g - 1][j - 1] - dist[0][j - 1] + 1,
            )
            if cycle_distance_profile(g, j) != direct:
                sweep.fail(c)
    return sweep.done()


def _sz_ge_we(n_max, n_min):
    lo = 1 if n_min is None else max(1, n_min)
    sweep = _Sweep("sz-ge-we", {"n_min": lo, "n_max": n_max})
    for n in range(lo, n_max + 1):
        count = 0
        for g in connected_graphs(n):
            count += 1
            sze, we = edge_szeged(g), edge_wiener(g)
            if sze < we or (sze == we) != (classify(g) is Kind.TREE):
                sweep.fail(g)
        sweep.report.details.append({"n": n, "graphs": count})
    return sweep.done()


_NAMED_CHECKS = {
    "2.1": _closed_form,
    "2.2": _glue_shift,
    "2.3": _consolidation,
    "2.4": _tree_identities,
    "2.5": _min_wiener_tree,
    "2.6": _cycle_profile,
    "sz-ge-we": _sz_ge_we,
}


def verify_small_diameter(n_max: int, n_min: int = 3) -> VerificationReport:
    """Unicyclic graphs of diameter 1 or 2 are exactly the classified candidates."""
    sweep = _Sweep("small-diameter", {"n_min": n_min, "n_max": n_max})
    for n in range(max(3, n_min), n_max + 1):
        found = sorted(
            canonical_graph6(g) for d in (1, 2) if d <= n - 2 for g in unicyclic_graphs(n, d)
        )
        expected = sorted(canonical_graph6(g) for g in small_diameter_candidates(n))
        sweep.report.details.append({"n": n, "found": found, "expected": expected})
        if found != expected:
            for g6 in sorted(set(found) ^ set(expected)):
                sweep.fail(g6)
    return sweep.done()


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """Every graph on ``n`` vertices up to isomorphism, in canonical form.

    Built by adding a vertex joined to every subset of an existing graph and
    deduplicating canonical forms; intended for ``n <= 7``.
    """
    if n < 1:
        raise GraphError(f"n must be >= 1, got {n}")
    if n == 1:
        return (Graph(1),)
    seen: dict[bytes, Graph] = {}
    for h in all_graphs(n - 1):
        for subset in range(1 << (n - 1)):
            edges = list(h.edges) + [(v, n - 1) for v in range(n - 1) if subset >> v & 1]
            g = Graph(n, edges)
            key = canonical_form(g)
            if key not in seen:
                seen[key] = g
    return tuple(graph6_decode(k) for k in sorted(seen))


def connected_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in all_graphs(n) if is_connected(g))
