"""Command-line interface: ``czdg {info,graph,invariants,verify,scan}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .construct import build_ring
from .errors import CzdgError, RingParseError, ResourceLimitError
from .graphs import SimpleGraph, annihilator_classes, compressed_graph, zero_divisor_graph
from .invariants import DEFAULT_WORK_LIMIT, INF, diameter, girth, metric_dimension, multiset_dimension
from .parser import format_ring_expr, parse_ring_expr
from .ring import DEFAULT_MAX_ORDER, FiniteRing, nonzero_zero_divisors, ring_flags, units
from .verifier import SUITES, VerifyConfig, run_suites

EXIT_OK, EXIT_PARSE, EXIT_BUILD, EXIT_UNDEFINED, EXIT_VERIFY, EXIT_LIMIT = 0, 2, 3, 4, 5, 6

GRAMMAR = """\
ring expressions:
  ring     := product | atom
  product  := atom ( "x" atom )+          (surrounded by whitespace, to disambiguate from variable x)
  atom     := "Z" int | "GF(" int "," int ")" | "F" int(prime power) | quotient | "(" ring ")"
  quotient := ("Z" int) "[" var ("," var)* "]" "/" "(" polylist ")" [ "^" int ]
  polylist := poly ("," poly)* ;  poly is ± sums of integer·monomial terms with "^" powers
  An exponent after the closing ")" of an ideal (e.g. "(x,y)^2") denotes ideal power.

  "×" is accepted for the product "x"; "F4" means GF(2,2) and "F7" means Z7.
  examples: Z16   F9   Z4 x F4   Z4[x]/(2x, x^2 - 2)   Z2[x,y]/(x,y)^2

exit codes: 0 ok, 2 parse error, 3 construction error, 4 graph undefined
(integral domain), 5 verification failure, 6 resource limit
"""

SCAN_HEADER = ["expr", "order", "num_zero_divisors", "czdg_vertices", "czdg_edges", "mdim", "metric_dim",
               "girth", "diameter", "is_local", "is_field", "is_reduced", "is_boolean"]

SCAN_HELP = """\
family: "Zn:a..b" (cyclic rings Z_a..Z_b in order) or a file with one ring
expression per line (blank lines and lines starting with # are skipped).
Invariants refer to the compressed graph; a ring whose compressed graph is
undefined (an integral domain) reports "undefined" for mdim, metric_dim,
girth and diameter and 0 vertices/edges. A ring that fails to parse or
construct, or whose search hits the subset limit, is written as its
expression followed by "error" in every other column.
"""


class UndefinedGraph(Exception):
    pass


def _fmt(v) -> str:
    if v is None:
        return "undefined"
    if v == INF:
        return "infinity"
    return str(v)


def _build(args, expr: str) -> FiniteRing:
    return build_ring(expr, max_order=args.max_order, degree_bound=args.degree_bound)


# --- info ---------------------------------------------------------------------------------

def cmd_ring_info(args) -> int:
    R = _build(args, args.expr)
    flags = ring_flags(R)
    zstar = len(nonzero_zero_divisors(R))
    classes = len(annihilator_classes(R))
    lines = [
        f"ring: {format_ring_expr(parse_ring_expr(args.expr))}",
        f"order: {R.order}",
        f"units: {len(units(R))}",
        f"zero_divisors: {zstar} nonzero ({zstar + 1} with 0)",
        f"classes: {classes}",
    ]
    lines += [f"{k}: {'yes' if v else 'no'}" for k, v in flags.items()]
    print("\n".join(lines))
    return EXIT_OK


# --- graph --------------------------------------------------------------------------------

def _graph_for(args, R: FiniteRing) -> SimpleGraph:
    if args.kind == "zdg":
        return zero_divisor_graph(R)
    G = compressed_graph(R)
    if G is None:
        raise UndefinedGraph("Γ_E undefined: R is an integral domain")
    return G


def _class_sizes(G: SimpleGraph) -> list[int]:
    return G.class_sizes if G.class_sizes is not None else [1] * G.n


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def render_dot(G: SimpleGraph, name: str) -> str:
    lines = [f"graph {name} {{"]
    for lbl, size in zip(G.labels, _class_sizes(G)):
        lines.append(f"  {_dot_id(lbl)} [class_size={size}];")
    for u, v in G.edges():
        lines.append(f"  {_dot_id(G.labels[u])} -- {_dot_id(G.labels[v])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_json(G: SimpleGraph) -> str:
    doc = {
        "vertices": [{"id": i, "label": lbl, "class_size": s}
                     for i, (lbl, s) in enumerate(zip(G.labels, _class_sizes(G)))],
        "edges": [[u, v] for u, v in G.edges()],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def render_edgelist(G: SimpleGraph) -> str:
    return "".join(f"{u} {v}\n" for u, v in G.edges())


def cmd_graph(args) -> int:
    R = _build(args, args.expr)
    G = _graph_for(args, R)
    if args.format == "dot":
        out = render_dot(G, args.kind)
    elif args.format == "json":
        out = render_json(G)
    else:
        out = render_edgelist(G)
    sys.stdout.write(out)
    return EXIT_OK


# --- invariants / scan --------------------------------------------------------------------

def scan_record(expr: str, max_order: int = DEFAULT_MAX_ORDER, degree_bound: int | None = None,
                work_limit: int = DEFAULT_WORK_LIMIT, workers: int = 1) -> dict[str, str]:
    R = build_ring(expr, max_order=max_order, degree_bound=degree_bound)
    flags = ring_flags(R)
    G = compressed_graph(R)
    rec = {
        "expr": format_ring_expr(parse_ring_expr(expr)),
        "order": str(R.order),
        "num_zero_divisors": str(len(nonzero_zero_divisors(R))),
        "czdg_vertices": str(G.n if G else 0),
        "czdg_edges": str(G.num_edges() if G else 0),
    }
    if G is None:
        rec.update(mdim="undefined", metric_dim="undefined", girth="undefined", diameter="undefined")
    else:
        rec.update(
            mdim=str(multiset_dimension(G, work_limit, workers)),
            metric_dim=_fmt(metric_dimension(G, work_limit, workers)),
            girth=_fmt(girth(G)),
            diameter=_fmt(diameter(G)),
        )
    for key in ("is_local", "is_field", "is_reduced", "is_boolean"):
        rec[key] = "1" if flags[key] else "0"
    return rec


def cmd_invariants(args) -> int:
    rec = scan_record(args.expr, args.max_order, args.degree_bound, args.limit_subsets, args.threads)
    if args.format == "json":
        sys.stdout.write(json.dumps(rec, indent=2, ensure_ascii=False) + "\n")
    elif args.format == "csv":
        sys.stdout.write(_csv([rec]))
    else:
        width = max(len(k) for k in rec)
        sys.stdout.write("".join(f"{k.ljust(width)}  {v}\n" for k, v in rec.items()))
    return EXIT_OK


def _csv(rows: list[dict[str, str]]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=SCAN_HEADER, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def parse_family(spec: str) -> list[str]:
    if spec.startswith("Zn:"):
        lo, sep, hi = spec[3:].partition("..")
        if not sep or not lo.strip().isdigit() or not hi.strip().isdigit():
            raise ValueError(f"bad cyclic family {spec!r}; expected Zn:a..b")
        return [f"Z{n}" for n in range(int(lo), int(hi) + 1)]
    lines = Path(spec).read_text(encoding="utf-8").splitlines()
    return [ln.strip() for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]


def _scan_one(job) -> dict[str, str]:
    expr, max_order, degree_bound, work_limit = job
    try:
        return scan_record(expr, max_order, degree_bound, work_limit)
    except CzdgError:
        return {"expr": expr, **{k: "error" for k in SCAN_HEADER[1:]}}


def scan_family(exprs: list[str], max_order: int = DEFAULT_MAX_ORDER, degree_bound: int | None = None,
                work_limit: int = DEFAULT_WORK_LIMIT, threads: int = 1) -> str:
    jobs = [(e, max_order, degree_bound, work_limit) for e in exprs]
    if threads > 1:
        with ProcessPoolExecutor(threads) as pool:
            rows = list(pool.map(_scan_one, jobs))  # map keeps family order
    else:
        rows = [_scan_one(j) for j in jobs]
    return _csv(rows)


def cmd_scan(args) -> int:
    try:
        exprs = parse_family(args.family)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    text = scan_family(exprs, args.max_order, args.degree_bound, args.limit_subsets, args.threads)
    if args.out in (None, "-"):
        sys.stdout.write(text)
        return EXIT_OK
    try:
        Path(args.out).write_text(text, encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_BUILD
    return EXIT_OK


# --- verify -------------------------------------------------------------------------------

def cmd_verify(args) -> int:
    config = VerifyConfig(max_n=args.max_order, max_p=args.max_p, degree_bound=args.degree_bound,
                          work_limit=args.limit_subsets)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    report = run_suites(names, config)
    sys.stdout.write(report.to_json() if args.format == "json" else report.to_text())
    return report.exit_code


# --- entry point --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    def limits(max_order: int, max_order_help: str) -> argparse.ArgumentParser:
        c = argparse.ArgumentParser(add_help=False)
        c.add_argument("--max-order", type=int, default=max_order, help=max_order_help)
        c.add_argument("--degree-bound", type=int, default=None,
                       help="truncation degree for quotients (default 2*maxdeg+2)")
        c.add_argument("--threads", type=int, default=1, help="worker processes (default 1)")
        c.add_argument("--limit-subsets", type=int, default=DEFAULT_WORK_LIMIT,
                       help="cap on subsets tested by dimension searches (default %(default)s)")
        return c

    common = limits(DEFAULT_MAX_ORDER, "largest ring order to tabulate (default %(default)s)")
    verify_common = limits(200, "largest n in the cyclic family Z_4..Z_n (default %(default)s)")

    p = argparse.ArgumentParser(
        prog="czdg",
        description="Finite commutative rings, their (compressed) zero-divisor graphs and multiset dimension.",
        epilog=GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True)
    fmt = argparse.RawDescriptionHelpFormatter

    s = sub.add_parser("info", parents=[common], help="order, units, zero divisors, flags",
                       epilog=GRAMMAR, formatter_class=fmt)
    s.add_argument("expr")
    s.set_defaults(func=cmd_ring_info)

    s = sub.add_parser("graph", parents=[common], help="export Γ(R) or Γ_E(R)", epilog=GRAMMAR,
                       formatter_class=fmt)
    s.add_argument("expr")
    s.add_argument("--kind", choices=["zdg", "czdg"], default="czdg")
    s.add_argument("--format", choices=["dot", "json", "edgelist"], default="edgelist")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("invariants", parents=[common], help="one scan record for a ring", epilog=GRAMMAR,
                       formatter_class=fmt)
    s.add_argument("expr")
    s.add_argument("--format", choices=["text", "json", "csv"], default="text")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("verify", parents=[verify_common], help="run claim verification suites",
                       formatter_class=fmt,
                       epilog="suites: " + ", ".join(SUITES) + ", all\n"
                              "exit 0 iff no failures outside the erratum registry, else 5.")
    s.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    s.add_argument("--max-p", type=int, default=31, help="largest prime for prime-indexed families")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan", parents=[common], help="CSV of invariants over a family", epilog=SCAN_HELP,
                       formatter_class=fmt)
    s.add_argument("family")
    s.add_argument("--out", default=None, help="output CSV path (default stdout)")
    s.set_defaults(func=cmd_scan)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RingParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UndefinedGraph as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_UNDEFINED
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except CzdgError as exc:
        print(f"construction error: {exc}", file=sys.stderr)
        return EXIT_BUILD


if __name__ == "__main__":
    sys.exit(main())
