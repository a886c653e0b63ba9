"""Command-line interface: ``qextremal <command> ...``.

Exit status: 0 when every check passes, 1 when a check fails, 2 on usage or
input errors.  JSON output carries ``"schema": 1`` and floats rounded to 12
significant digits, so identical inputs give identical bytes.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import constructions as cons
from .bounds import degree_avg_bound, edge_degree_bound, equality_case
from .graph import Graph, GraphError, is_connected, parse_graph, to_edge_list, to_graph6
from .lemmas import SUITES, run_suite
from .odd_cycle import is_bipartite, odd_girth, shortest_odd_cycle
from .partitions import PartitionError, VertexPartition, quotient, verify_quotient_eigenvalue
from .search import (SearchCapError, certify_theorem_1_3, certify_theorem_1_4,
                     classical_edge_bounds, default_threads, max_q_by_order, max_q_by_size)
from .spectral import char_poly, largest_real_root, perron_vector, q_index, signless_laplacian

SCHEMA = 1


class UsageError(Exception):
    pass


def _num(x: float) -> float:
    return float(f"{x:.12g}")


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps({"schema": SCHEMA, **obj}, indent=2) + "\n")


def _read_graph(args) -> Graph:
    if getattr(args, "graph", None):
        text = args.graph
    elif getattr(args, "file", None):
        with open(args.file) as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    if not text.strip():
        raise UsageError("no graph given (pass graph6, --file, or stdin)")
    return parse_graph(text)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

FAMILIES = {
    "cycle": (cons.cycle, 1),
    "path": (cons.path, 1),
    "star": (cons.star, 1),
    "complete": (cons.complete, 1),
    "complete_bipartite": (cons.complete_bipartite, 2),
    "cycle_star": (cons.cycle_star, 2),
    "extremal": (cons.extremal_by_order, 2),
    "s_nk": (cons.s_nk, 2),
    "s_nk_plus": (cons.s_nk_plus, 2),
    "g0": (lambda n, k: cons.g0(n, k)[0], 2),
}


def cmd_construct(args) -> int:
    family = args.family
    if family == "blow_up_cycle":
        if len(args.params) < 4:
            raise UsageError("blow_up_cycle needs a length L >= 3 and L multiplicities")
        length, r = args.params[0], args.params[1:]
        if len(r) != length:
            raise UsageError(f"blow_up_cycle {length} needs {length} multiplicities")
        g = cons.blow_up(cons.cycle(length), r)
    else:
        if family not in FAMILIES:
            raise UsageError(f"unknown family {family!r}")
        fn, arity = FAMILIES[family]
        if len(args.params) != arity:
            raise UsageError(f"{family} takes {arity} integer parameter(s)")
        g = fn(*args.params)
    if args.format == "edgelist":
        sys.stdout.write(to_edge_list(g))
    else:
        sys.stdout.write(to_graph6(g) + "\n")
    return 0


def cmd_q(args) -> int:
    g = _read_graph(args)
    q = q_index(g)
    if args.json:
        _emit({"graph6": to_graph6(g), "q_index": _num(q)})
    else:
        print(repr(_num(q)))
    return 0


def cmd_perron(args) -> int:
    g = _read_graph(args)
    pv = perron_vector(g)
    _emit({"graph6": to_graph6(g), "eigenvalue": _num(pv.eigenvalue),
           "vector": [_num(x) for x in pv.entries], "iterations": pv.iterations})
    return 0


def cmd_charpoly(args) -> int:
    if args.matrix:
        with open(args.matrix) as fh:
            m = json.load(fh)
        poly = char_poly(m)
        source = {"matrix": m}
    else:
        g = _read_graph(args)
        poly = char_poly(signless_laplacian(g))
        source = {"graph6": to_graph6(g)}
    out = {**source, "polynomial": str(poly), "coefficients": poly.tolist()}
    if args.root:
        out["largest_root"] = _num(largest_real_root(poly))
    _emit(out)
    return 0


def cmd_quotient(args) -> int:
    g = _read_graph(args)
    with open(args.partition) as fh:
        cells = json.load(fh)
    p = VertexPartition(tuple(tuple(c) for c in cells))
    b = quotient(g, p)
    out = {"graph6": to_graph6(g), "equitable": b.equitable,
           "quotient": [[_frac(x) for x in row] for row in b.entries]}
    ok = b.equitable
    if b.equitable and b.is_integral():
        poly = char_poly(b.as_int_matrix())
        out["char_poly"] = str(poly)
        if is_connected(g):
            r = verify_quotient_eigenvalue(g, p)
            out.update(q_index=_num(r.q_index), quotient_root=_num(r.quotient_root),
                       eigenvalue_match=r.passed)
            ok = r.passed
    out["result"] = "PASS" if ok else "FAIL"
    _emit(out)
    return 0 if ok else 1


def cmd_bounds(args) -> int:
    g = _read_graph(args)
    q = q_index(g)
    b1 = edge_degree_bound(g)
    b2 = degree_avg_bound(g)
    ok = q <= b1 + 1e-8 and q <= float(b2) + 1e-8
    _emit({"graph6": to_graph6(g), "q_index": _num(q), "edge_degree_bound": b1,
           "degree_avg_bound": _frac(b2), "regular_or_semiregular_bipartite": equality_case(g),
           "result": "PASS" if ok else "FAIL"})
    return 0 if ok else 1


def cmd_oddgirth(args) -> int:
    g = _read_graph(args)
    og = odd_girth(g)
    _emit({"graph6": to_graph6(g), "bipartite": is_bipartite(g),
           "odd_girth": None if math.isinf(og) else og,
           "shortest_odd_cycle": shortest_odd_cycle(g)})
    return 0


def cmd_search(args) -> int:
    if args.order is not None:
        rep = max_q_by_order(args.order, args.k, cap=args.cap or 9, threads=args.threads)
    else:
        rep = max_q_by_size(args.size, args.k, cap=args.cap or 12, threads=args.threads)
    sys.stdout.write(json.dumps(rep.to_dict(args.runtime), indent=2) + "\n")
    return 0


def cmd_certify(args) -> int:
    if args.theorem == "1.3":
        if args.n is None or args.m is not None:
            raise UsageError("--theorem 1.3 takes --n and --k")
        rep = certify_theorem_1_3(args.n, args.k, cap=args.cap or 9, threads=args.threads)
    else:
        if args.m is None or args.n is not None:
            raise UsageError("--theorem 1.4 takes --m and --k")
        rep = certify_theorem_1_4(args.m, args.k, cap=args.cap or 12, threads=args.threads)
    sys.stdout.write(json.dumps(rep.to_dict(args.runtime), indent=2) + "\n")
    return 0 if rep.passed else 1


def cmd_lemmas(args) -> int:
    rep = run_suite(args.suite)
    d = rep.to_dict()
    if args.json:
        sys.stdout.write(json.dumps(d, indent=2) + "\n")
    else:
        print(f"suite {rep.suite}: {d['result']} ({rep.checked} checked, "
              f"{len(rep.counterexamples)} counterexamples, {rep.inconclusive} inconclusive)")
        for line in rep.counterexamples + rep.review + rep.notes:
            print("  " + line)
    return 0 if rep.passed else 1


def cmd_edgebounds(args) -> int:
    rep = classical_edge_bounds(args.n)
    sys.stdout.write(json.dumps(rep.to_dict(), indent=2) + "\n")
    return 0 if rep.passed else 1


# ---------------------------------------------------------------------------

def _graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", nargs="?", help="graph6 string (default: read stdin)")
    p.add_argument("--file", help="read the graph (graph6 or edge list) from a file")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qextremal",
                                 description="Q-index computations on graphs without short odd cycles")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a named graph")
    p.add_argument("family", help=", ".join(sorted(FAMILIES) + ["blow_up_cycle"]))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("q", help="Q-index")
    _graph_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_q)

    p = sub.add_parser("perron", help="Perron vector of Q")
    _graph_args(p)
    p.set_defaults(fn=cmd_perron)

    p = sub.add_parser("charpoly", help="exact characteristic polynomial")
    _graph_args(p)
    p.add_argument("--matrix", help="JSON file holding a symmetric integer matrix")
    p.add_argument("--root", action="store_true", help="also report the largest real root")
    p.set_defaults(fn=cmd_charpoly)

    p = sub.add_parser("quotient", help="quotient matrix for a partition")
    _graph_args(p)
    p.add_argument("--partition", required=True, help="JSON file: list of cells")
    p.set_defaults(fn=cmd_quotient)

    p = sub.add_parser("bounds", help="degree-based upper bounds")
    _graph_args(p)
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("oddgirth", help="odd girth and a shortest odd cycle")
    _graph_args(p)
    p.set_defaults(fn=cmd_oddgirth)

    for name, fn in (("search", cmd_search), ("certify", cmd_certify)):
        p = sub.add_parser(name)
        if name == "search":
            g = p.add_mutually_exclusive_group(required=True)
            g.add_argument("--order", type=int)
            g.add_argument("--size", type=int)
        else:
            p.add_argument("--theorem", choices=("1.3", "1.4"), required=True)
            p.add_argument("--n", type=int)
            p.add_argument("--m", type=int)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--threads", type=int, default=default_threads())
        p.add_argument("--cap", type=int, help="raise the order/size cap (slow above the default)")
        p.add_argument("--runtime", action="store_true", help="include wall time in the report")
        p.set_defaults(fn=fn)

    p = sub.add_parser("lemmas", help="run a property suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_lemmas)

    p = sub.add_parser("edgebounds", help="exhaustive triangle-free edge bounds")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_edgebounds)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        print("qextremal: --threads must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except (UsageError, GraphError, PartitionError, SearchCapError, ValueError,
            OSError, json.JSONDecodeError) as exc:
        print(f"qextremal: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
