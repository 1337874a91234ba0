"""Time the pure-Python kernels against the compiled ones.

    python3 benchmarks/bench_kernels.py [--n 10] [--repeat 3]

Workloads are the unicyclic graphs of the given order plus a batch of random
connected graphs of order 40.
"""

from __future__ import annotations

import argparse
import itertools
import random
import sys
import time

from edgeszeged import Graph, _kernels_py, kernels
from edgeszeged.enumeration import unicyclic_graphs
from edgeszeged.graph import is_connected


def random_graphs(count: int, n: int, p: float, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])
        if is_connected(g):
            out.append(g)
    return out


def workloads(mod, graphs):
    def distances():
        for g in graphs:
            mod.distance_matrix(g.n, g.neighbors)

    def partitions():
        for g in graphs:
            dist = mod.distance_matrix(g.n, g.neighbors)
            mod.edge_partitions(dist, g.edges)
            mod.edge_wiener_sum(dist, g.edges)

    def canonical():
        for g in graphs:
            mod.canonical_labeling(g.n, g.masks())

    return {"distances": distances, "partitions": partitions, "canonical": canonical}


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=10, help="order of the unicyclic family")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    compiled = kernels.compiled_module()
    if compiled is None:
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1

    suites = {
        f"unicyclic n={args.n}": list(unicyclic_graphs(args.n)),
        "random n=40": random_graphs(50, 40, 0.12, seed=1),
    }
    print(f"{'workload':<18} {'kernel':<11} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for label, graphs in suites.items():
        py = workloads(_kernels_py, graphs)
        cy = workloads(compiled, graphs)
        for name in py:
            tp = best_of(py[name], args.repeat)
            tc = best_of(cy[name], args.repeat)
            print(f"{label:<18} {name:<11} {tp:>10.4f} {tc:>10.4f} {tp / tc:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
