"""Command-line front end.

    ramanujan-ogf zeta --s 3
    ramanujan-ogf method --s 3 --order 4
    ramanujan-ogf diff --seq 0,1,8,27,64,125,216,343
    ramanujan-ogf expand --num 1,0,1 --den 1,-2,-1,4,-1,-2,1 --terms 8
    ramanujan-ogf eulerian --row 5

Every command accepts ``--json``. Results go to stdout, errors to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from ramanujan_ogf.combinatorics import eulerian_row, zeta_neg
from ramanujan_ogf.deconvolution import expand_ogf
from ramanujan_ogf.differences import (
    DifferenceKey,
    difference_key,
    difference_matrix,
    format_matrix,
)
from ramanujan_ogf.exact_arith import (
    format_rational,
    format_rational_list,
    parse_rational_list,
)
from ramanujan_ogf.method import MethodReport, derive_report
from ramanujan_ogf.series import Polynomial, RationalOGF, TruncatedSeries, format_polynomial

DEFAULT_ORDER = 8
DEFAULT_TERMS = 16
DEFAULT_MAX_DEPTH = 12


def _int_at_least(minimum: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {value}")
        return value

    parse.__name__ = f"integer>={minimum}"
    return parse


def _rational_list(min_len: int = 1):
    def parse(text: str):
        try:
            values = parse_rational_list(text)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
        if len(values) < min_len:
            raise argparse.ArgumentTypeError(f"need at least {min_len} comma-separated values")
        return values

    parse.__name__ = "rational list"
    return parse


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2)


def _strs(values) -> list[str]:
    return [format_rational(v) for v in values]


def _wrap(p: Polynomial) -> str:
    text = format_polynomial(p)
    return text if sum(1 for c in p.coeffs if c != 0) <= 1 else f"({text})"


def _power(base: str, e: int) -> str:
    return f"({base})" if e == 1 else f"({base})^{e}"


def format_key_ogf(key: DifferenceKey) -> str:
    return f"{_wrap(Polynomial(key.values))}/{_power('1-z', key.depth)}"


# -- method -------------------------------------------------------------------


def _term(c, n: int, first: bool) -> str:
    mag = format_rational(abs(c))
    sign = "-" if c < 0 else ("" if first else "+")
    return f"{sign}{mag}z^{n}"


def _table_cells(row: TruncatedSeries, skip_zeros: bool) -> list[str]:
    cells = []
    first = True
    for n, c in enumerate(row):
        if skip_zeros and c == 0:
            cells.append("")
            continue
        cells.append(_term(c, n, first))
        first = False
    return cells


def format_subtraction_table(report: MethodReport) -> str:
    g, h2, k = report.open_form_rows
    rows = [_table_cells(g, False), _table_cells(h2, True), _table_cells(k, False)]
    width = max(len(c) for row in rows for c in row)
    body = [" ".join(c.rjust(width) for c in row) for row in rows]
    lines = [
        "   " + body[0] + " ...",
        "-( " + body[1] + " ...)",
    ]
    lines.append("-" * max(len(line) for line in lines))
    lines.append("   " + body[2] + " ...")
    return "\n".join(lines)


def format_closed_form(report: MethodReport) -> str:
    e = report.s + 1
    return (
        f"{_wrap(report.upsilon)}/{_power('1-z', e)}"
        f" - 2^{e} {_wrap(report.lambda_)}/({_power('1-z', e)}{_power('1+z', e)})"
        f" = {_wrap(report.xi)}/{_power('1+z', e)}"
    )


def format_method(report: MethodReport) -> str:
    s, e = report.s, report.s + 1
    lines = [
        f"s = {s}: open forms through z^{report.order}",
        format_subtraction_table(report),
        "",
        "closed form:",
        format_closed_form(report),
        "identity: " + ("holds" if report.identity_holds else "FAILS"),
        "",
        "substituting z = 1:",
        f"C - 2^{e} C = {format_rational(report.xi_at_one)}/{2 ** e}",
        f"C = {format_rational(report.constant_C)}",
        f"zeta(-{s}) = {format_rational(report.zeta_check)}",
    ]
    return "\n".join(lines)


def method_json(report: MethodReport) -> dict:
    g, h2, k = report.open_form_rows
    return {
        "command": "method",
        "s": report.s,
        "order": report.order,
        "upsilon": _strs(report.upsilon.coeffs),
        "lambda": _strs(report.lambda_.coeffs),
        "xi": _strs(report.xi.coeffs),
        "identity_holds": report.identity_holds,
        "xi_at_one": format_rational(report.xi_at_one),
        "constant_C": format_rational(report.constant_C),
        "zeta_check": format_rational(report.zeta_check),
        "open_form_rows": {"g": _strs(g), "two_pow_h": _strs(h2), "k": _strs(k)},
    }


# -- commands -----------------------------------------------------------------


def cmd_zeta(args) -> int:
    value = format_rational(zeta_neg(args.s))
    print(_dump({"command": "zeta", "s": args.s, "value": value}) if args.json else value)
    return 0


def cmd_method(args) -> int:
    report = derive_report(args.s, args.order)
    print(_dump(method_json(report)) if args.json else format_method(report))
    ok = report.identity_holds and report.constant_C == report.zeta_check
    return 0 if ok else 1


def cmd_diff(args) -> int:
    matrix = difference_matrix(args.seq, args.max_depth)
    key = difference_key(args.seq, args.max_depth)
    ogf = format_key_ogf(key)
    if args.json:
        doc = {
            "command": "diff",
            "rows": [_strs(row) for row in matrix.rows],
            "key": _strs(key.values),
            "depth": key.depth,
            "ogf": ogf,
        }
        print(_dump(doc))
    else:
        print(format_matrix(matrix))
        print(f"key: {key}")
        print(f"ogf: {ogf}")
    return 0


def cmd_expand(args) -> int:
    num, den = Polynomial(args.num), Polynomial(args.den)
    if args.den[0] == 0:
        raise ZeroDivisionError("denominator constant term c_0 must be nonzero")
    series = expand_ogf(RationalOGF(num, den), args.terms)
    if args.json:
        print(_dump({"command": "expand", "terms": args.terms, "coefficients": _strs(series)}))
    else:
        print(format_rational_list(series))
    return 0


def cmd_eulerian(args) -> int:
    row = eulerian_row(args.row)
    if args.json:
        print(_dump({"command": "eulerian", "row": args.row, "values": [str(v) for v in row]}))
    else:
        print(",".join(str(v) for v in row))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramanujan-ogf",
        description="Exact generating-function tools for Ramanujan-style sums of powers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str, func):
        p = sub.add_parser(name, help=help_, description=help_)
        p.add_argument("--json", action="store_true", help="emit a single JSON document")
        p.set_defaults(func=func)
        return p

    p = add("zeta", "print zeta(-s) as an exact rational", cmd_zeta)
    p.add_argument("--s", type=_int_at_least(0), required=True)

    p = add("method", "print the subtraction derivation for the s-th powers", cmd_method)
    p.add_argument("--s", type=_int_at_least(1), required=True)
    p.add_argument("--order", type=_int_at_least(1), default=DEFAULT_ORDER,
                   help=f"last power of z shown in the open forms (default {DEFAULT_ORDER})")

    p = add(
        "diff",
        "backward-difference table, difference key and closed form of a sequence",
        cmd_diff,
    )
    p.add_argument("--seq", type=_rational_list(2), required=True,
                   help="comma-separated terms; supply at least 2*depth+2 of them")
    p.add_argument("--max-depth", type=_int_at_least(1), default=DEFAULT_MAX_DEPTH)

    p = add("expand", "open-form coefficients of num(z)/den(z)", cmd_expand)
    p.add_argument("--num", type=_rational_list(), required=True,
                   help="numerator coefficients from z^0 upward")
    p.add_argument("--den", type=_rational_list(), required=True,
                   help="denominator coefficients from z^0 upward; the first must be nonzero")
    p.add_argument("--terms", type=_int_at_least(1), default=DEFAULT_TERMS)

    p = add("eulerian", "row of the Eulerian triangle", cmd_eulerian)
    p.add_argument("--row", type=_int_at_least(1), required=True)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
