"""Command-line interface.

Exit codes: 0 success, 1 usage or invalid input, 2 verification or
agreement failure, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import formats
from .errors import (
    BudgetExhausted,
    ConstructionInvalid,
    NoDecomposition,
    NotAWitness,
    NotFound,
    ParseError,
    PreconditionError,
)
from .factory import construct, decompose
from .graph import Shape
from .oracle import DEFAULT_BUDGET, arrows_oracle, min_arrowing_s
from .ramsey import find_violation, size_ramsey, upper_bound, witness_coloring

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_RESOURCE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> list[int]:
    """``"a..b"`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a..b' or an integer, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _fail(code: int, payload: dict) -> int:
    print(_dump(payload), file=sys.stderr)
    return code


def cmd_compute(args) -> int:
    ans = size_ramsey((args.j, args.n, args.m))
    if args.format == "json":
        print(_dump(ans.to_dict()))
    else:
        print(f"m_{ans.j}(S_{ans.n}, S_{ans.m}) = {ans.value}")
        print(f"branch: {ans.branch.value}")
        if ans.lower is not None:
            print(f"bounds: {ans.lower} <= {ans.value} <= {ans.upper}")
    return EXIT_OK


def cmd_construct(args) -> int:
    j, s, d = args.j, args.s, args.d
    try:
        g, report = construct(j, s, d)
    except ConstructionInvalid as exc:
        return _fail(EXIT_FAIL, {"error": "ConstructionInvalid", "report": exc.report.to_dict()})
    except NoDecomposition as exc:
        return _fail(EXIT_FAIL, {"error": "NoDecomposition", "message": str(exc)})
    except PreconditionError as exc:
        return _fail(EXIT_USAGE, {"error": type(exc).__name__, "message": str(exc)})
    dec = decompose(j, s, d).to_dict() if d else None
    if args.format == "json":
        print(_dump({
            "j": j,
            "s": s,
            "d": d,
            "decomposition": dec,
            "report": report.to_dict(),
            "edges": [[list(u), list(v)] for u, v in g.vertex_edges()],
        }))
        return EXIT_OK
    if args.format == "edgelist":
        sys.stdout.write(formats.graph_to_edgelist(g))
    elif args.format == "dot":
        sys.stdout.write(formats.graph_to_dot(g, name=f"K_{j}x{s}_d{d}"))
    else:
        print(f"# {d}-regular spanning subgraph of K_{j}x{s}: {len(g)} edges")
        if dec:
            print(f"# decomposition: {dec['case_tag']} k1={dec['k1']} k2={dec['k2']} rem={dec['rem']}")
        sys.stdout.write(formats.graph_to_edgelist(g))
        print(_dump(report.to_dict()))
        return EXIT_OK
    print(_dump(report.to_dict()), file=sys.stderr)
    return EXIT_OK


def _emit_coloring(c, fmt: str, out) -> None:
    if fmt == "dot":
        out.write(formats.coloring_to_dot(c))
    elif fmt == "json":
        red = [list(e) for e, b in zip(c.shape.edges(), c.red_indicator) if b]
        out.write(_dump({"j": c.shape.j, "s": c.shape.s, "red": red}) + "\n")
    else:
        out.write(formats.coloring_to_text(c))


def cmd_witness(args) -> int:
    try:
        c = witness_coloring(Shape(args.j, args.s), args.n, args.m)
    except NotAWitness as exc:
        return _fail(EXIT_FAIL, {"error": "NotAWitness", "message": str(exc)})
    except PreconditionError as exc:
        return _fail(EXIT_USAGE, {"error": type(exc).__name__, "message": str(exc)})
    if args.output:
        with open(args.output, "w") as fh:
            _emit_coloring(c, args.format, fh)
    else:
        _emit_coloring(c, args.format, sys.stdout)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        c = formats.read_coloring(args.coloring)
    except (OSError, ParseError) as exc:
        return _fail(EXIT_USAGE, {"error": "ParseError", "message": str(exc)})
    bad = find_violation(c, args.n, args.m)
    if args.format == "json":
        payload = {"good": bad is None, "n": args.n, "m": args.m}
        if bad is not None:
            v, color, deg = bad
            payload.update(vertex=list(v), color=color.label, degree=deg)
        print(_dump(payload))
    elif bad is None:
        print(f"good: no red S_{args.n} and no blue S_{args.m}")
    else:
        v, color, deg = bad
        k = args.n if color.label == "red" else args.m
        print(f"bad: {color.label} S_{k} at {v} ({color.label} degree {deg} >= {k - 1})")
    return EXIT_OK if bad is None else EXIT_FAIL


def cmd_oracle(args) -> int:
    try:
        res = arrows_oracle(args.j, args.s, args.n, args.m, budget=args.budget, jobs=args.jobs)
    except BudgetExhausted as exc:
        return _fail(EXIT_RESOURCE, {"error": "BudgetExhausted", "message": str(exc)})
    if args.format == "json":
        print(_dump(res.to_dict()))
    elif args.format in ("dot", "edgelist"):
        if res.certificate is None:
            print(f"# K_{args.j}x{args.s} arrows (S_{args.n}, S_{args.m}); no certificate")
        else:
            _emit_coloring(res.certificate, "dot" if args.format == "dot" else "text", sys.stdout)
    else:
        verdict = "->" if res.arrows else "-/->"
        print(f"K_{args.j}x{args.s} {verdict} (S_{args.n}, S_{args.m})")
        print(f"method: {res.method.value}, nodes explored: {res.nodes_explored}")
        if res.certificate is not None:
            sys.stdout.write(formats.coloring_to_text(res.certificate))
    return EXIT_OK


def cmd_table(args) -> int:
    rows = []
    for j in args.j:
        for n in args.n:
            for m in args.m:
                row = size_ramsey((j, n, m)).to_dict()
                if args.with_oracle:
                    s_max = row["value"] + 1
                    if n >= 3 and m >= 3:
                        s_max = max(s_max, upper_bound((j, n, m)) + 1)
                    try:
                        row["oracle"] = min_arrowing_s(j, n, m, s_max, budget=args.budget, jobs=args.jobs)
                    except NotFound:
                        row["oracle"] = None
                    row["agree"] = row["oracle"] == row["value"]
                rows.append(row)
    if args.format == "json":
        print(_dump(rows))
    else:
        cols = ["j", "n", "m", "value", "branch", "lower", "upper"]
        if args.with_oracle:
            cols += ["oracle", "agree"]
        print("\t".join(cols))
        for row in rows:
            print("\t".join("-" if row[c] is None else str(row[c]) for c in cols))
    if args.with_oracle and not all(r["agree"] for r in rows):
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sizeramsey", description="Size Ramsey multipartite numbers for stars.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_, formats_=("text", "json")):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("--format", choices=formats_, default=formats_[0])
        return sp

    def search_flags(sp):
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node limit")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes for the search")

    sp = add("compute", cmd_compute, "closed-form m_j(S_n, S_m)")
    sp.add_argument("-j", type=int, required=True)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-m", type=int, required=True)

    sp = add("construct", cmd_construct, "d-regular spanning subgraph of K_{j x s}",
             ("text", "json", "dot", "edgelist"))
    sp.add_argument("-j", type=int, required=True)
    sp.add_argument("-s", type=int, required=True)
    sp.add_argument("-d", type=int, required=True)

    sp = add("witness", cmd_witness, "good coloring of K_{j x s} below the threshold",
             ("text", "json", "dot", "edgelist"))
    for flag in ("-j", "-s", "-n", "-m"):
        sp.add_argument(flag, type=int, required=True)
    sp.add_argument("-o", "--output", help="write the coloring to this file")

    sp = add("verify", cmd_verify, "check a coloring file for red S_n / blue S_m")
    sp.add_argument("coloring", help="coloring file ('shape j s' header, 'i,l -- p,r R|B' lines)")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-m", type=int, required=True)

    sp = add("oracle", cmd_oracle, "decide K_{j x s} -> (S_n, S_m) by exhaustive search",
             ("text", "json", "dot", "edgelist"))
    for flag in ("-j", "-s", "-n", "-m"):
        sp.add_argument(flag, type=int, required=True)
    search_flags(sp)

    sp = add("table", cmd_table, "grid of m_j values, optionally checked by the oracle")
    sp.add_argument("-j", type=parse_range, required=True, metavar="RANGE")
    sp.add_argument("-n", type=parse_range, required=True, metavar="RANGE")
    sp.add_argument("-m", type=parse_range, required=True, metavar="RANGE")
    sp.add_argument("--with-oracle", action="store_true")
    search_flags(sp)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExhausted as exc:
        return _fail(EXIT_RESOURCE, {"error": "BudgetExhausted", "message": str(exc)})
    except PreconditionError as exc:
        return _fail(EXIT_USAGE, {"error": type(exc).__name__, "message": str(exc)})


if __name__ == "__main__":
    sys.exit(main())
