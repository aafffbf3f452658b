"""Command-line interface.

Subcommands: enumerate, stat, genfun, verify, oracle, orders.
Exit codes: 0 success / all checks pass, 1 verification mismatch,
2 usage, parse or budget errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import identities, oracle, stats
from .errors import Error
from .orders import BUILTIN_ORDERS, order_from_spec
from .perm import (
    DEFAULT_STATE_BUDGET,
    FAMILIES,
    GroupSpec,
    enumerate_group,
    format_element,
    parse_element,
)
from .qpoly import format_poly, poly_csv_rows, poly_to_json
from .report import render_distribution, report_json_entry, write_report

_FAMILY_R = {"sn": 1, "bn": 2, "dn": 2, "un": 2, "udn": 2}


def _common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("json", "csv", "text"), default="text",
                        help="output format (default text)")
    parser.add_argument("--budget", type=int, default=DEFAULT_STATE_BUDGET,
                        help=f"max states to enumerate or search (default {DEFAULT_STATE_BUDGET})")
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for random orders given as plain 'random'")


def _family_r(args) -> int:
    if args.family in _FAMILY_R:
        return _FAMILY_R[args.family]
    if args.r is None:
        raise Error(f"family {args.family} needs --r")
    return args.r


def _resolve_order(args, r: int, n: int, needed: bool):
    if args.order is None:
        if r == 1:
            # One-color alphabets admit a single sensible ranking.
            return order_from_spec("natural", 1, n)
        if needed:
            raise Error("this statistic is order-sensitive; pass --order")
        return None
    return order_from_spec(args.order, r, n, default_seed=args.seed)


def _emit_rows(rows: list[list], fmt: str, header: list[str] | None = None) -> None:
    if fmt == "json":
        if header:
            print(json.dumps([dict(zip(header, row)) for row in rows], indent=2))
        else:
            print(json.dumps(rows, indent=2))
        return
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if header:
            writer.writerow(header)
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
        return
    for row in rows:
        print(",".join(str(x) for x in row))


def cmd_enumerate(args) -> int:
    r = _family_r(args)
    spec = GroupSpec(args.family, args.n, r, args.i)
    stat_names = [s for s in (args.stats.split(",") if args.stats else []) if s]
    needed = any(name in stats.ORDER_SENSITIVE for name in stat_names)
    order = _resolve_order(args, r, args.n, needed)
    style = "plain" if args.family == "sn" else ("signed" if r == 2 else "caret")
    rows = []
    for g in enumerate_group(spec, args.budget):
        row = [format_element(g, style)]
        for name in stat_names:
            row.append(stats.evaluate(name, g, order))
        rows.append(row)
    _emit_rows(rows, args.format, ["window"] + stat_names if args.format != "text" else None)
    return 0


def cmd_stat(args) -> int:
    r = _family_r(args)
    g = parse_element(args.element, r)
    order = _resolve_order(args, r, g.n, args.stat in stats.ORDER_SENSITIVE)
    value = stats.evaluate(args.stat, g, order)
    if args.format == "json":
        print(json.dumps({"element": args.element, "stat": args.stat, "value": value}))
    else:
        print(value)
    return 0


def cmd_genfun(args) -> int:
    r = _family_r(args)
    # Single-color alphabets admit one sensible ranking; default it.
    default = "natural" if r == 1 else None
    qorder = (args.order or default) if args.qstat in stats.ORDER_SENSITIVE else None
    qspec = identities.StatSpec(args.qstat, qorder, args.qtransform)
    tspec = None
    if args.tstat:
        torder = (
            (args.torder or args.order or default)
            if args.tstat in stats.ORDER_SENSITIVE
            else None
        )
        tspec = identities.StatSpec(args.tstat, torder, args.ttransform)
    weight = args.weight
    if weight == "csignF":
        if args.order is None:
            raise Error("--weight csignF needs --order")
        weight = f"csignF:{args.order}"
    spec = identities.GenFunSpec(args.family, qspec, tspec, weight)
    poly = identities.genfun(spec, args.n, r, args.budget)
    if args.figure:
        render_distribution(poly, args.figure, f"{args.family} n={args.n}: {spec.label()}")
    if args.format == "json":
        print(json.dumps(poly_to_json(poly)))
    elif args.format == "csv":
        # bare a,b,c triples, ascending by (a, b)
        _emit_rows([list(row) for row in poly_csv_rows(poly)], "csv")
    else:
        print(format_poly(poly))
    return 0


def cmd_verify(args) -> int:
    if args.all:
        reports = identities.verify_all(args.budget)
    else:
        if not args.identity:
            raise Error("pass --identity <ID> or --all")
        if args.n is None:
            raise Error("--identity needs --n")
        reports = [identities.verify(args.identity, args.n, args.r, args.budget)]
    if args.report:
        write_report(reports, args.report, figures=not args.no_figures)
    if args.format == "json":
        print(json.dumps([report_json_entry(r, with_timing=False) for r in reports], indent=2))
    else:
        rows = []
        for rep in reports:
            params = f"n={rep.n}" + (f",r={rep.r}" if rep.r is not None else "")
            rows.append([rep.id, params, rep.status.upper(), rep.detail])
        widths = [max(len(str(row[i])) for row in rows) for i in range(3)]
        for row in rows:
            print(f"{row[0]:<{widths[0]}}  {row[1]:<{widths[1]}}  {row[2]:<{widths[2]}}  {row[3]}")
        passed = sum(1 for rep in reports if rep.passed)
        print(f"{passed}/{len(reports)} checks passed")
    return 0 if all(rep.passed for rep in reports) else 1


def cmd_oracle(args) -> int:
    rows = oracle.compare_lengths(args.kind, args.n, args.r, args.budget)
    style = {"sn-length": "plain", "bn-length": "signed"}.get(args.kind)
    out = []
    for row in rows:
        g = row["element"]
        out.append([
            format_element(g, style),
            row["formula"],
            row["bfs"],
            "match" if row["match"] else "MISMATCH",
        ])
    _emit_rows(out, args.format, ["window", "formula_length", "bfs_length", "match"])
    return 0 if all(row["match"] for row in rows) else 1


def cmd_orders(args) -> int:
    r = args.r if args.r is not None else 2
    order = order_from_spec(args.name, r, args.n, default_seed=args.seed)
    from .perm import format_letter

    letters = [format_letter(l, r) for l in order.letters]
    if args.format == "json":
        print(json.dumps({"r": r, "n": args.n, "letters": letters}))
    elif args.format == "csv":
        _emit_rows([letters], "csv")
    else:
        print(" < ".join(letters))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wreathstats",
        description="Exact permutation statistics and identity verification "
                    "on colored permutation groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list group elements with optional stat columns")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--i", type=int, default=None, help="color index (colorni)")
    p.add_argument("--stats", default="", help="comma-separated statistic names")
    p.add_argument("--order", default=None)
    _common_flags(p)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("stat", help="evaluate one statistic on one element")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--element", required=True)
    p.add_argument("--stat", required=True, choices=stats.STAT_NAMES)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--order", default=None)
    _common_flags(p)
    p.set_defaults(fn=cmd_stat)

    p = sub.add_parser("genfun", help="exact generating polynomial of one or two statistics")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--qstat", required=True, choices=stats.STAT_NAMES)
    p.add_argument("--tstat", default=None, choices=stats.STAT_NAMES)
    p.add_argument("--order", default=None, help="order for both exponents unless --torder")
    p.add_argument("--torder", default=None)
    p.add_argument("--qtransform", choices=identities.TRANSFORMS, default="identity")
    p.add_argument("--ttransform", choices=identities.TRANSFORMS, default="identity")
    p.add_argument("--weight", choices=("none", "sign", "csignF"), default="none")
    p.add_argument("--figure", default=None, help="also render the distribution to this PNG")
    _common_flags(p)
    p.set_defaults(fn=cmd_genfun)

    p = sub.add_parser("verify", help="check registered identities exactly")
    p.add_argument("--identity", default=None)
    p.add_argument("--all", action="store_true")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--report", default=None, help="write report.json/summary.csv/figures here")
    p.add_argument("--no-figures", action="store_true")
    _common_flags(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("oracle", help="compare formula lengths against BFS word lengths")
    p.add_argument("--kind", required=True,
                   choices=("sn-length", "bn-length", "grn-length", "elld"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=None)
    _common_flags(p)
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("orders", help="print a linear order's letters, smallest first")
    p.add_argument("--name", required=True,
                   help="|".join(BUILTIN_ORDERS) + "|random:<seed>|explicit:<letters>")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=None)
    _common_flags(p)
    p.set_defaults(fn=cmd_orders)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
