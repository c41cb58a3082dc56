"""Command line front end.

Exit codes: 0 success, 1 property or validation failure, 2 parse or
configuration error, 3 threshold ordering undecided at the given precision.
"""

from __future__ import annotations

import argparse
import json
import sys

from .documents import (
    DocumentError,
    curve_csv,
    curve_doc,
    decimal_digits,
    load_polynomial,
    parse_coefficients,
    profile_doc,
)
from .fuzz import PROPERTIES, FuzzConfig, run_fuzz
from .numeric import format_rational, parse_rational
from .sequences import PROPERTIES as SEQUENCE_PROPERTIES
from .sequences import coefficient_sequence
from .shift import AdmissiblePolynomial, NotAdmissible, mode_range_at, shift_profile
from .thresholds import UndecidedAtPrecision, mode_curve, threshold_profile

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_UNDECIDED = 0, 1, 2, 3


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _rational_arg(text: str, what: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise _Exit(EXIT_PARSE, f"{what}: {exc}") from None


def _read_coefficients(args):
    if args.coeffs is not None:
        items = [c.strip() for c in args.coeffs.split(",") if c.strip()]
        return parse_coefficients(items), None
    if args.input is None:
        raise _Exit(EXIT_PARSE, "no input: give a JSON file, '-' for stdin, or --coeffs")
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise _Exit(EXIT_PARSE, f"cannot read {args.input}: {exc}") from None
    return load_polynomial(text)


def _polynomial(args) -> AdmissiblePolynomial:
    coeffs, name = _read_coefficients(args)
    return AdmissiblePolynomial(coeffs, name)


def _precision(args):
    precision = _rational_arg(args.precision, "--precision")
    if precision <= 0:
        raise _Exit(EXIT_PARSE, "--precision must be positive")
    return precision


def _header(P) -> dict:
    doc = {"coeffs": [format_rational(a) for a in P.coeffs]}
    if P.name is not None:
        doc["name"] = P.name
    return doc


def cmd_shift(args):
    P = _polynomial(args)
    d = _rational_arg(args.d, "--d")
    if d < 0:
        raise _Exit(EXIT_FAILED, "shift d must be nonnegative")
    profile = shift_profile(P, d)
    return {**_header(P), "d": format_rational(d),
            "values": [format_rational(v) for v in profile.values]}, EXIT_OK


def cmd_modes(args):
    P = _polynomial(args)
    d = _rational_arg(args.d, "--d")
    if d <= 0:
        raise _Exit(EXIT_FAILED, "shift d must be positive")
    modes = mode_range_at(P, d)
    top = shift_profile(P, d).values[modes.m_star]
    return {**_header(P), "d": format_rational(d), "m_star": modes.m_star,
            "m_sup": modes.m_sup, "max": format_rational(top)}, EXIT_OK


def cmd_thresholds(args):
    P = _polynomial(args)
    precision = _precision(args)
    profile = threshold_profile(P, precision)
    return {**_header(P), "precision": format_rational(precision),
            "thresholds": profile_doc(profile, decimal_digits(precision)),
            "ties": list(profile.ties)}, EXIT_OK


def cmd_curve(args):
    P = _polynomial(args)
    precision = _precision(args)
    curve = mode_curve(P, precision)
    digits = decimal_digits(precision)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(curve_csv(curve, digits))
    return {**_header(P), "precision": format_rational(precision),
            **curve_doc(curve, digits)}, EXIT_OK


def cmd_check(args):
    coeffs, name = _read_coefficients(args)
    try:
        seq = coefficient_sequence(coeffs)
    except ValueError as exc:
        raise _Exit(EXIT_FAILED, str(exc)) from None
    violation = SEQUENCE_PROPERTIES[args.property](seq)
    doc = {"values": [format_rational(v) for v in seq], "property": args.property,
           "holds": violation is None,
           "violation": list(violation) if violation is not None else None}
    return doc, EXIT_OK if violation is None else EXIT_FAILED


def cmd_fuzz(args):
    props = tuple(p.strip() for p in args.properties.split(",") if p.strip())
    try:
        config = FuzzConfig(args.seed, args.trials, args.max_degree, props)
    except ValueError as exc:
        raise _Exit(EXIT_PARSE, str(exc)) from None
    if args.jobs < 1:
        raise _Exit(EXIT_PARSE, "--jobs must be >= 1")
    report = run_fuzz(config, jobs=args.jobs)
    return report, EXIT_OK if report.failures == 0 else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shiftmodes",
        description="Exact modes and mode thresholds of P(x+d) for nondecreasing P.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("input", nargs="?", help="JSON document path, or - for stdin")
        p.add_argument("--coeffs", help="inline comma-separated coefficients a_0,...,a_m")
        p.add_argument("--json", action="store_true", help="JSON output (the default)")
        return p

    p = with_input(sub.add_parser("shift", help="coefficients of P(x+d)"))
    p.add_argument("--d", required=True)
    p.set_defaults(func=cmd_shift)

    p = with_input(sub.add_parser("modes", help="smallest and greatest mode of P(x+d)"))
    p.add_argument("--d", required=True)
    p.set_defaults(func=cmd_modes)

    for name, func, text in (("thresholds", cmd_thresholds, "mode transition thresholds"),
                             ("curve", cmd_curve, "mode as a step function of d")):
        p = with_input(sub.add_parser(name, help=text))
        p.add_argument("--precision", default="1/2^40")
        if name == "curve":
            p.add_argument("--csv", help="also write the intervals to this CSV file")
        p.set_defaults(func=func)

    p = with_input(sub.add_parser("check", help="test a sequence property"))
    p.add_argument("--property", required=True, choices=sorted(SEQUENCE_PROPERTIES))
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("fuzz", help="randomized property testing")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--max-degree", type=int, default=12)
    p.add_argument("--properties", default=",".join(PROPERTIES))
    p.add_argument("--jobs", type=int, default=1, help="worker threads")
    p.add_argument("--json", action="store_true", help="JSON output (the default)")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        result, code = args.func(args)
    except _Exit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotAdmissible as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except UndecidedAtPrecision as exc:
        print(f"error: undecided at precision: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED

    if hasattr(result, "to_json"):
        sys.stdout.write(result.to_json())
    else:
        sys.stdout.write(json.dumps(result, indent=2) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
