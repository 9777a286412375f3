"""Command line: ``tperfect <verb> ...`` (also ``python -m tperfect``).

Exit status 0 when every check passes, 1 when a verification fails, 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import sys

from . import certificates as cert
from .coloring import (
    PreconditionError, ceil_chif_coloring, four_color_col, three_color_structured,
)
from .graph6 import Graph6Error, decode_graph6, format_adjacency_list
from .graphs import GuardError, chromatic_number_exact, find_clique
from .polytope import fractional_chromatic_hperfect, format_rational, parse_vector, verify_hstab_vertex
from .recognition import h_perfect_col, t_perfect_col


class InputError(Exception):
    pass


def _graph(text: str):
    if text == "-":
        text = sys.stdin.readline()
    try:
        return decode_graph6(text)
    except Graph6Error as exc:
        raise InputError(f"bad graph6 string {text.strip()!r}: {exc}") from None


def _yn(b) -> str:
    return "unknown" if b is None else ("yes" if b else "no")


def cmd_parse(args, out) -> int:
    g = _graph(args.graph6)
    print(f"vertices: {g.n}", file=out)
    print(f"edges: {g.m}", file=out)
    print(f"adjacency: {format_adjacency_list(g)}", file=out)
    return 0


def cmd_recognize(args, out) -> int:
    g = _graph(args.graph6)
    rep = t_perfect_col(g)
    print(f"complement is a line graph: {_yn(rep.is_complement_of_line_graph)}", file=out)
    if rep.root is not None:
        h = rep.root.h
        print(f"root: {h.n} vertices, edges {' '.join(f'{a}-{b}' for a, b in h.sorted_edges)}", file=out)
        print(f"vertex i <-> root edge: {' '.join(f'{i}:{a}-{b}' for i, (a, b) in enumerate(rep.root.edge_of))}", file=out)
    print(f"h-perfect: {_yn(rep.h_perfect)}", file=out)
    print(f"t-perfect: {_yn(rep.t_perfect)}", file=out)
    if rep.witness is not None:
        print(f"witness: {rep.witness}", file=out)
    return 0


def cmd_color(args, out) -> int:
    g = _graph(args.graph6)
    try:
        if args.mode == "exact":
            k, colors = chromatic_number_exact(g)
        else:
            fn = {"structured": three_color_structured, "four": four_color_col, "chif": ceil_chif_coloring}[args.mode]
            col = fn(g)
            k, colors = col.num_colors, list(col.assignment)
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=out)
        if exc.witness is not None:
            print(f"witness: {exc.witness}", file=out)
        return 1
    except GuardError as exc:
        raise InputError(str(exc)) from None
    valid = all(colors[u] != colors[v] for u, v in g.edges)
    print(f"colors: {k}", file=out)
    print(f"assignment: {' '.join(map(str, colors))}", file=out)
    print(f"proper: {_yn(valid)}", file=out)
    return 0 if valid else 1


def cmd_chif(args, out) -> int:
    g = _graph(args.graph6)
    rep = h_perfect_col(g)
    print(f"chi_f: {format_rational(fractional_chromatic_hperfect(g))}", file=out)
    print(f"h-perfect: {_yn(rep.h_perfect)}", file=out)
    if rep.h_perfect is False:
        print("note: the formula max(omega, 2k/(k-1)) assumes h-perfection", file=out)
        return 1
    return 0


def cmd_verify_cert(args, out) -> int:
    g = _graph(args.graph6)
    try:
        x = parse_vector(args.vector)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad vector: {exc}") from None
    if len(x) != g.n:
        raise InputError(f"vector has {len(x)} coordinates, graph has {g.n} vertices")
    rep = verify_hstab_vertex(g, x)
    k4_free = find_clique(g, 4) is None
    print(f"member: {_yn(rep.member)}", file=out)
    if rep.violated is not None:
        print(f"violated: {rep.violated.describe()}", file=out)
    print(f"non-integral: {_yn(rep.non_integral)}", file=out)
    print(f"tight constraints: {len(rep.tight_constraints)}", file=out)
    for c in rep.tight_constraints:
        print(f"  {c.describe()}", file=out)
    print(f"rank: {rep.rank} of {g.n}", file=out)
    print(f"vertex: {_yn(rep.is_vertex)}", file=out)
    print(f"K4-free: {_yn(k4_free)}", file=out)
    print(f"refutes t-perfection: {_yn(rep.is_vertex and rep.non_integral and k4_free)}", file=out)
    return 0 if rep.is_vertex else 1


def cmd_corpus_verify(args, out) -> int:
    try:
        if args.files:
            certs = [c for f in args.files for c in cert.load_corpus(f)]
        else:
            bad = [name for name, ok in cert.verify_checksums().items() if not ok]
            if bad:
                print(f"checksum mismatch: {' '.join(bad)}", file=out)
                return 1
            certs = cert.bundled_corpus()
        excluded = [] if args.no_excluded else cert.load_excluded(args.excluded)
    except (OSError, cert.CorpusError, Graph6Error) as exc:
        raise InputError(str(exc)) from None
    report = cert.verify_corpus(certs, args.criticality, args.p6, excluded)
    print(report.to_json_lines() if args.json else report.to_text(), file=out)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tperfect", description="t-perfection tools for complements of line graphs")
    sub = p.add_subparsers(dest="verb", required=True, metavar="verb")

    s = sub.add_parser("parse", help="decode a graph6 string")
    s.add_argument("graph6", help="graph6 string, or - for stdin")
    s.set_defaults(func=cmd_parse)

    s = sub.add_parser("recognize", help="h- and t-perfection of a complement of a line graph")
    s.add_argument("graph6")
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("color", help="colour a graph")
    s.add_argument("graph6")
    s.add_argument("--mode", choices=("structured", "exact", "four", "chif"), default="structured")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("chif", help="fractional chromatic number of an h-perfect graph")
    s.add_argument("graph6")
    s.set_defaults(func=cmd_chif)

    s = sub.add_parser("verify-cert", help="check that a rational point is a vertex of HSTAB")
    s.add_argument("graph6")
    s.add_argument("vector", help="comma-separated rationals, e.g. 2/5,2/5,1/5")
    s.set_defaults(func=cmd_verify_cert)

    s = sub.add_parser("corpus", help="corpus operations")
    csub = s.add_subparsers(dest="action", required=True, metavar="action")
    v = csub.add_parser("verify", help="verify certificate files (default: the bundled tables)")
    v.add_argument("files", nargs="*")
    v.add_argument("--criticality", action="store_true", help="also check 4-criticality")
    v.add_argument("--p6", action="store_true", help="also check P6-freeness")
    v.add_argument("--excluded", help="excluded-graph file (default: bundled)")
    v.add_argument("--no-excluded", action="store_true", help="skip the excluded graphs")
    v.add_argument("--json", action="store_true", help="one JSON record per line")
    v.set_defaults(func=cmd_corpus_verify)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"tperfect: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
