"""Command-line front end.

Exit status: 0 success, 1 a verification check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions, kernels
from .enumeration import free_trees, unicyclic_graphs
from .graph import GraphError
from .graph6 import edgelist_encode, graph6_encode, read_edgelists, read_graph6_lines
from .harness import NAMED_CHECKS, verify_lemma, verify_small_diameter, verify_theorem1
from .invariants import index_report
from .unicyclic import decompose

INDEX_NAMES = {
    "wiener": "wiener",
    "edge-wiener": "edge_wiener",
    "szeged": "szeged",
    "edge-szeged": "edge_szeged",
}


class UsageError(Exception):
    pass


def _open_input(path: str):
    if path == "-":
        return sys.stdin
    try:
        return open(path, encoding="ascii")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _read_graphs(path: str, fmt: str):
    fh = _open_input(path)
    try:
        lines = fh.read().splitlines()
    finally:
        if fh is not sys.stdin:
            fh.close()
    if fmt == "g6":
        return list(read_graph6_lines(lines))
    return list(read_edgelists(lines))


def _emit(g, out: str) -> None:
    if out == "g6":
        print(graph6_encode(g))
    else:
        sys.stdout.write(edgelist_encode(g))


def cmd_compute(args) -> int:
    wanted = [s.strip() for s in args.indices.split(",") if s.strip()]
    unknown = [s for s in wanted if s not in INDEX_NAMES]
    if unknown:
        raise UsageError(f"unknown index {unknown[0]!r}; choose from {', '.join(INDEX_NAMES)}")
    for g in _read_graphs(args.input, args.format):
        rep = index_report(g).to_dict(per_edge=args.per_edge)
        row = {"graph6": graph6_encode(g), "n": g.n, "m": g.m}
        row.update({INDEX_NAMES[k]: rep[INDEX_NAMES[k]] for k in wanted})
        if args.per_edge:
            row["per_edge"] = rep["per_edge"]
        print(json.dumps(row))
    return 0


def cmd_construct(args) -> int:
    fam = args.family
    if fam == "extremal":
        g = constructions.extremal_unicyclic(_need(args, "n"), _need(args, "d"))
    elif fam == "caterpillar":
        g = constructions.caterpillar_tree(_need(args, "n"), _need(args, "d"))
    elif fam == "broom":
        g = constructions.broom(args.l1, args.l2, args.a).graph
    elif fam == "cycle":
        g = constructions.cycle(_need(args, "n"))
    elif fam == "path":
        g = constructions.path(_need(args, "n"))
    else:
        g = constructions.star(_need(args, "n"))
    _emit(g, args.out)
    return 0


def _need(args, name: str) -> int:
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"construct {args.family} needs --{name}")
    return value


def cmd_enumerate(args) -> int:
    if args.kind == "trees":
        if args.girth is not None:
            raise UsageError("--girth applies to unicyclic graphs only")
        stream = free_trees(args.n, args.d)
    else:
        stream = unicyclic_graphs(args.n, args.d, args.girth)
    if args.count:
        print(sum(1 for _ in stream))
        return 0
    for g in stream:
        print(graph6_encode(g))
    return 0


def cmd_decompose(args) -> int:
    for g in _read_graphs(args.input, args.format):
        print(json.dumps(decompose(g).to_dict()))
    return 0


def cmd_verify(args) -> int:
    if args.what == "theorem1":
        n_min = 6 if args.n_min is None else args.n_min
        d_values = None if args.d is None else [args.d]
        reports = [verify_theorem1(n_min, args.n_max, d_values, workers=args.workers)]
    elif args.what == "classification":
        reports = [verify_small_diameter(args.n_max, 3 if args.n_min is None else args.n_min)]
    else:
        names = [args.name] if args.name else list(NAMED_CHECKS)
        for nm in names:
            if nm not in NAMED_CHECKS:
                raise UsageError(f"unknown check {nm!r}; choose from {', '.join(NAMED_CHECKS)}")
        reports = [verify_lemma(nm, args.n_max, args.n_min) for nm in names]
    for rep in reports:
        _print_report(rep)
    if args.json:
        payload = reports[0].to_dict() if len(reports) == 1 else [r.to_dict() for r in reports]
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return 0 if all(r.passed for r in reports) else 1


def _print_report(rep) -> None:
    status = "PASS" if rep.passed else "FAIL"
    params = " ".join(f"{k}={v}" for k, v in rep.params.items() if v is not None)
    print(f"{status}  {rep.check:<16} {params}  ({rep.duration_ms:.0f} ms)")
    if rep.check == "unique-minimiser" and rep.details:
        print(f"    {'n':>3} {'d':>3} {'family':>7} {'min Sz_e':>9} {'unique':>7} {'match':>6}")
        for row in rep.details:
            print(
                f"    {row['n']:>3} {row['d']:>3} {row['family_size']:>7} {row['minimum']:>9}"
                f" {str(row['unique']):>7} {str(row['pass']):>6}"
            )
    for g6 in rep.counterexamples:
        print(f"    counterexample: {g6}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="edgeszeged",
        description="Distance-based graph indices and exhaustive unicyclic verification.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({kernels.BACKEND} kernels)")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="indices of graphs read from a file")
    c.add_argument("--in", dest="input", default="-", help="input file, - for stdin")
    c.add_argument("--format", choices=("g6", "edgelist"), default="g6")
    c.add_argument("--indices", default=",".join(INDEX_NAMES))
    c.add_argument("--per-edge", action="store_true", help="include per-edge partitions")
    c.set_defaults(func=cmd_compute)

    b = sub.add_parser("construct", help="build a named graph")
    b.add_argument("family", choices=("extremal", "caterpillar", "broom", "cycle", "path", "star"))
    b.add_argument("--n", type=int)
    b.add_argument("--d", type=int)
    b.add_argument("--l1", type=int, default=0)
    b.add_argument("--l2", type=int, default=0)
    b.add_argument("--a", type=int, default=0)
    b.add_argument("--out", choices=("g6", "edgelist"), default="g6")
    b.set_defaults(func=cmd_construct)

    e = sub.add_parser("enumerate", help="stream non-isomorphic graphs as graph6")
    e.add_argument("kind", choices=("trees", "unicyclic"))
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--d", type=int)
    e.add_argument("--girth", type=int)
    e.add_argument("--count", action="store_true", help="print only the number of graphs")
    e.set_defaults(func=cmd_enumerate)

    d = sub.add_parser("decompose", help="cycle and tree orders of unicyclic graphs")
    d.add_argument("--in", dest="input", default="-")
    d.add_argument("--format", choices=("g6", "edgelist"), default="g6")
    d.set_defaults(func=cmd_decompose)

    v = sub.add_parser("verify", help="exhaustive verification sweeps")
    v.add_argument("what", choices=("theorem1", "lemma", "classification"))
    v.add_argument("--name", help=f"check to run ({', '.join(NAMED_CHECKS)}); default all")
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--n-min", type=int)
    v.add_argument("--d", type=int, help="theorem1: sweep this diameter only")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--json", help="write the JSON report here")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError) as exc:
        print(f"edgeszeged: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
