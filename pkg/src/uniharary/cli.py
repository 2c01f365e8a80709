"""Command-line entry point: ``uniharary <command> ...``.

Data goes to stdout, diagnostics to stderr. Exit status is 0 on success, 1 on
a runtime error or a failed theorem check, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from uniharary.enumeration import enumerate_unicyclic, family_name, max_n, verify_theorems
from uniharary.formats import emit_edge_list, emit_graph6, parse_graphs
from uniharary.graph import Graph, GraphError, cycle_path, cycle_star, make_cycle
from uniharary.indices import (
    additively_weighted_harary,
    classical_indices,
    cp3_closed_form,
    cs3_closed_form,
    cycle_h_a_closed_form,
)
from uniharary.rational import approx, format_rational
from uniharary.transforms import maximize_chain, minimize_chain

SCHEMA_VERSION = 1

CLOSED_FORMS = {"cs3": cs3_closed_form, "cp3": cp3_closed_form, "cycle": cycle_h_a_closed_form}


def _dump(payload: dict) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, **payload}, indent=2)


def _read_graphs(source: str, fmt: str | None) -> list[Graph]:
    if source == "-":
        text = sys.stdin.read()
    else:
        with open(source, encoding="ascii") as fh:
            text = fh.read()
    return parse_graphs(text, fmt)


def _table(rows: list[list[str]], header: list[str]) -> str:
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(header, widths)).rstrip()]
    for r in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    return "\n".join(lines)


def cmd_index(args) -> int:
    graphs = _read_graphs(args.file, args.format)
    if args.json:
        out = []
        for g in graphs:
            rep = classical_indices(g)
            out.append({
                "graph6": emit_graph6(g),
                "n": g.n,
                "h_a": format_rational(rep.h_a),
                "h_a_approx": approx(rep.h_a),
                "harary": format_rational(rep.harary),
                "wiener": rep.wiener,
            })
        print(_dump({"graphs": out}))
    else:
        for g in graphs:
            h = additively_weighted_harary(g)
            print(f"H_A = {format_rational(h)} ({approx(h)})")
    return 0


def cmd_family(args) -> int:
    if args.family == "cycle":
        if args.pendants != 0:
            raise GraphError("a cycle has no pendant vertices; use 'family cycle <n> 0'")
        g = make_cycle(args.k)
    elif args.family == "cs":
        g = cycle_star(args.k, args.pendants)
    else:
        g = cycle_path(args.k, args.pendants)
    if args.format == "edgelist":
        sys.stdout.write(emit_edge_list(g))
    else:
        print(emit_graph6(g))
    return 0


def cmd_closed_form(args) -> int:
    print(format_rational(CLOSED_FORMS[args.form](args.n)))
    return 0


def cmd_enumerate(args) -> int:
    classes = enumerate_unicyclic(args.n, workers=args.workers)
    if args.count_only:
        print(len(classes))
        return 0
    rows = []
    for i, g in enumerate(classes):
        h = additively_weighted_harary(g)
        rows.append([str(i), emit_graph6(g), format_rational(h), approx(h), family_name(g) or ""])
    if args.json:
        print(_dump({
            "n": args.n,
            "class_count": len(classes),
            "classes": [
                {"graph6": r[1], "h_a": r[2], "h_a_approx": r[3], "name": r[4] or None} for r in rows
            ],
        }))
    else:
        print(_table(rows, ["#", "graph6", "H_A", "approx", "family"]))
    return 0


def cmd_verify(args) -> int:
    report = verify_theorems(args.n, workers=args.workers)
    if args.json:
        print(_dump(report.to_dict()))
    else:
        scan = report.scan
        print(f"n = {scan.n}: {scan.class_count} unicyclic classes")
        for label, value, attainers in (
            ("max", scan.max_value, scan.max_attainers),
            ("min", scan.min_value, scan.min_attainers),
        ):
            names = ", ".join(f"{a.label()} [{a.graph6}]" for a in attainers)
            print(f"{label} H_A = {format_rational(value)} ({approx(value)}) attained by {names}")
        rows = []
        for c in report.checks:
            status = "PASS" if c.passed else ("FAIL" if c.asserted else "NOTE")
            rows.append([status, c.name, c.detail])
        print(_table(rows, ["status", "check", "detail"]))
        print("OK" if report.ok else "FAILED")
    return 0 if report.ok else 1


def _cmd_chain(args, chain) -> int:
    traces = [chain(g) for g in _read_graphs(args.file, args.format)]
    if args.json:
        print(_dump({"traces": [t.to_dict() for t in traces]}))
        return 0
    for t in traces:
        if args.trace:
            print(t.to_text())
        else:
            h = t.steps[-1].h_a_after if t.steps else additively_weighted_harary(t.final)
            print(f"{emit_graph6(t.final)} H_A = {format_rational(h)} ({approx(h)})")
        for i in t.monotone_violations():
            s = t.steps[i]
            print(
                f"note: step {i + 1} ({s.name}) is not strict: "
                f"{format_rational(s.h_a_before)} -> {format_rational(s.h_a_after)}",
                file=sys.stderr,
            )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uniharary",
        description="Exact additively weighted Harary index and extremal unicyclic graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", help="index of graphs read from a file or stdin")
    p.add_argument("file", help="input path, or - for stdin")
    p.add_argument("--format", choices=["graph6", "edgelist"], default=None,
                   help="input format (sniffed when omitted)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("family", help="emit CS_{k,m}, CP_{k,m} or the cycle C_k")
    p.add_argument("family", choices=["cs", "cp", "cycle"])
    p.add_argument("k", type=int, help="cycle length")
    p.add_argument("pendants", type=int, help="number of pendant vertices (n - k)")
    p.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("closed-form", help="closed-form index value")
    p.add_argument("form", choices=sorted(CLOSED_FORMS))
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("enumerate", help="all unicyclic graphs on n vertices up to isomorphism")
    p.add_argument("n", type=int)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="exhaustively check both extremal bounds for n")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    for name, chain in (("maximize", maximize_chain), ("minimize", minimize_chain)):
        p = sub.add_parser(name, help=f"{name} the index by repeated rewrites")
        p.add_argument("file", help="input path, or - for stdin")
        p.add_argument("--trace", action="store_true", help="print every rewrite step")
        p.add_argument("--json", action="store_true")
        p.add_argument("--format", choices=["graph6", "edgelist"], default=None)
        p.set_defaults(func=lambda args, chain=chain: _cmd_chain(args, chain))
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        max_n()
        return args.func(args)
    except (GraphError, ValueError, ZeroDivisionError, OSError) as exc:
        print(f"uniharary: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
