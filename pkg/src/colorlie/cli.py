"""Command-line interface: ``colorlie {dims,series,schreier,verify}``."""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .arith import IntegralityError, Prime, as_dimension
from .gchar import GroupSeries, dim_by_group_degree, g_character_free, group_fiber
from .operators import free_restricted_character, free_super_character
from .schreier import schreier_generators_series
from .series import Series, all_multidegrees
from .tables import DimensionRow, DimensionTable, SpecError, load_spec
from .verify import SUITES, run_suite
from .witt import dim_multidegree, dim_multidegree_p

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _prime(text: str) -> Prime:
    try:
        return Prime(int(text))
    except (ValueError, TypeError):
        raise argparse.ArgumentTypeError(f"{text!r} is not a prime") from None


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        n = 0
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return n


_TERM = re.compile(r"^(\d*)(?:(t)(?:\^(\d+))?)?$")


def parse_poly(text: str, max_degree: int) -> Series:
    """Parse ``"2t"``, ``"t+t^2"``, ``"0"`` into a univariate series."""
    coeffs = [Fraction(0)] * (max_degree + 1)
    compact = text.replace(" ", "")
    if not compact:
        raise ValueError("empty polynomial")
    for term in re.split(r"(?=[+-])", compact):
        if not term:
            continue
        sign = -1 if term[0] == "-" else 1
        body = term.lstrip("+-")
        m = _TERM.match(body)
        if not body or not m or (not m.group(1) and not m.group(2)):
            raise ValueError(f"cannot parse term {term!r} in {text!r}")
        coeff = int(m.group(1)) if m.group(1) else 1
        degree = (int(m.group(3)) if m.group(3) else 1) if m.group(2) else 0
        if degree <= max_degree:
            coeffs[degree] += sign * coeff
    return Series.univariate(coeffs, max_degree)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="colorlie", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    dims = sub.add_parser("dims", help="dimension table from the closed-form formulas")
    dims.add_argument("--spec", required=True)
    dims.add_argument("--max-degree", type=_positive)
    dims.add_argument("--multidegree", type=_int_list)
    dims.add_argument("--p", type=_prime)
    dims.add_argument("--group-element", type=_int_list)
    dims.add_argument("--degree", type=_positive, help="restrict group totals to one total degree")
    dims.add_argument("--format", choices=("json", "csv"), default="json")

    series = sub.add_parser("series", help="coefficients of the character series")
    series.add_argument("--spec", required=True)
    series.add_argument("--max-degree", type=_positive)
    series.add_argument("--p", type=_prime)
    series.add_argument("--group", action="store_true")
    series.add_argument("--format", choices=("json", "csv"), default="json")

    schreier = sub.add_parser("schreier", help="generating function of free generators of a subalgebra")
    schreier.add_argument("--hx", required=True)
    schreier.add_argument("--hquot", required=True)
    schreier.add_argument("--max-degree", type=_positive, required=True)

    verify = sub.add_parser("verify", help="run a self-check suite")
    verify.add_argument("--suite", required=True, choices=sorted(SUITES))
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--max-degree", type=_positive)
    return parser


def _closed_form(spec, alpha, p):
    return dim_multidegree(spec, alpha) if p is None else dim_multidegree_p(spec, alpha, p)


def _group_of(spec, alpha):
    return spec.group_degree(alpha) if spec.group is not None else None


def cmd_dims(args) -> DimensionTable:
    spec = load_spec(args.spec, args.max_degree)
    p = args.p
    if p is not None and not spec.all_even:
        raise SpecError("--p needs every generator class to be even")
    g = None
    if args.group_element is not None:
        if spec.group is None:
            raise SpecError("--group-element needs a spec with a group block")
        try:
            g = spec.group.element(args.group_element)
        except ValueError as exc:
            raise SpecError(str(exc)) from exc
    rows = []
    if args.multidegree is not None:
        try:
            alpha = spec.check_multidegree(args.multidegree)
        except ValueError as exc:
            raise SpecError(str(exc)) from exc
        if not any(alpha):
            raise SpecError("the zero multidegree has no Lie component")
        rows.append(DimensionRow(alpha, sum(alpha), _closed_form(spec, alpha, p), "closed-form",
                                 _group_of(spec, alpha)))
    elif g is not None:
        if args.degree is not None and args.degree > spec.max_degree:
            raise SpecError(f"--degree {args.degree} exceeds the truncation {spec.max_degree}")
        degrees = [args.degree] if args.degree else range(1, spec.max_degree + 1)
        for n in degrees:
            for alpha in group_fiber(spec, n, g):
                rows.append(DimensionRow(alpha, n, _closed_form(spec, alpha, p), "closed-form", g))
            rows.append(DimensionRow(None, n, dim_by_group_degree(spec, n, g, p), "closed-form", g))
    else:
        for alpha in all_multidegrees(spec):
            rows.append(DimensionRow(alpha, sum(alpha), _closed_form(spec, alpha, p), "closed-form",
                                     _group_of(spec, alpha)))
    return DimensionTable.build(rows, spec, p)


def cmd_series(args) -> DimensionTable:
    spec = load_spec(args.spec, args.max_degree)
    p = args.p
    if p is not None and not spec.all_even:
        raise SpecError("--p needs every generator class to be even")
    if args.group and spec.group is None:
        raise SpecError("--group needs a spec with a group block")
    rows = []
    if args.group:
        ch = g_character_free(spec) if p is None else GroupSeries.from_series(free_restricted_character(spec, p))
        for (alpha, g), c in ch.items():
            rows.append(DimensionRow(alpha, sum(alpha), as_dimension(c), "series", g))
    else:
        ch = free_super_character(spec) if p is None else free_restricted_character(spec, p)
        for alpha, c in ch.items():
            rows.append(DimensionRow(alpha, sum(alpha), as_dimension(c), "series", _group_of(spec, alpha)))
    return DimensionTable.build(rows, spec, p)


def cmd_schreier(args) -> str:
    n = args.max_degree
    try:
        hx = parse_poly(args.hx, n)
        hquot = parse_poly(args.hquot, n)
        hz = schreier_generators_series(hx, hquot)
    except ValueError as exc:
        raise SpecError(str(exc)) from exc
    coeffs = [int(c) for c in hz.coefficients()]
    return json.dumps({"maxDegree": n, "coefficients": coeffs})


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "verify":
            result = run_suite(args.suite, args.seed, args.max_degree)
            print(result.summary(), file=out)
            return EXIT_OK if result.passed else EXIT_MISMATCH
        if args.command == "schreier":
            print(cmd_schreier(args), file=out)
            return EXIT_OK
        table = cmd_dims(args) if args.command == "dims" else cmd_series(args)
    except (UsageError, SpecError) as exc:
        print(f"colorlie: error: {exc}", file=err)
        return EXIT_USAGE
    except IntegralityError as exc:
        print(f"colorlie: internal error: {exc}", file=err)
        return EXIT_MISMATCH
    text = table.to_json() if args.format == "json" else table.to_csv()
    out.write(text if text.endswith("\n") else text + "\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
