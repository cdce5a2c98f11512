"""
Command-line front end.

    python -m lah_bell table lah 5 --format csv
    python -m lah_bell poly lb-r 2 --r 1 --x 1
    python -m lah_bell verify all --quick --jobs 4
    python -m lah_bell oracle 4
    python -m lah_bell dobinski 3 --r 1 --x 1/2 --lambda 2

Exit codes: 0 pass or value, 1 verification failure, 2 usage error,
3 unsupported combination (or a value outside an operation's domain).
"""

import argparse
import logging
import sys

import mpmath

from .checks.suites import SUITE_NAMES, expand_suite_names, resolve_bounds
from .config import BOUND_CAPS, DEFAULT_JOBS, LOG_LEVEL, ORACLE_MAX_N
from .dobinski import bell_dobinski_eval, dobinski_eval
from .errors import DomainError, UnsupportedCombination
from .exact import parse_rational
from .oracle import distribution_by_block_count
from .output.formatter import (
    OutputRecord,
    dobinski_fields,
    first_counterexample,
    format_distribution,
    format_dobinski,
    format_verify_report,
    render_poly,
    table_bfile,
    table_csv,
    table_record,
    verify_record,
)
from .poly.families import bell_poly, lambda_r_lah, lambda_r_lah_bell_poly, r_lah_bell_poly
from .runner import run_suites
from .tables import triangle

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3

TABLE_KINDS = ("lah", "rlah", "lambda-rlah", "stirling2")
POLY_FAMILIES = ("lb", "lb-r", "lb-lambda", "bell")
BFILE_HELP = "b-file lines are 'idx value' with idx = n(n+1)/2 + k (row-major, starting at 0)"


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _pos_int(text: str) -> int:
    value = _nonneg_int(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _hp_literal(text: str) -> str:
    try:
        mpmath.mpf(text)
    except (ValueError, TypeError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    return text


def _emit(text: str) -> None:
    sys.stdout.write(text)


def cmd_table(args) -> int:
    if args.lam is not None and args.kind != "lambda-rlah":
        raise UnsupportedCombination(f"--lambda applies to lambda-rlah only, not {args.kind}")
    params = {"kind": args.kind, "n_max": args.n_max, "r": args.r, "lambda": args.lam}
    if args.kind == "lambda-rlah":
        rows = []
        for n in range(args.n_max + 1):
            row = [lambda_r_lah(n, k, args.r) for k in range(n + 1)]
            rows.append(row if args.lam is None else [p.evaluate(args.lam) for p in row])
    else:
        kind = {"lah": "lah", "rlah": "r_lah", "stirling2": "stirling2"}[args.kind]
        rows = [list(row) for row in triangle(kind, args.n_max, args.r if kind == "r_lah" else None).rows]
    if args.format == "csv":
        _emit(table_csv(rows))
    elif args.format == "bfile":
        _emit(table_bfile(rows))
    else:
        _emit(table_record(args.kind, params, rows).to_json() + "\n")
    return EXIT_OK


def cmd_poly(args) -> int:
    if args.lam is not None and args.family != "lb-lambda":
        raise UnsupportedCombination(f"--lambda applies to lb-lambda only, not {args.family}")
    if args.family == "lb-lambda":
        value = lambda_r_lah_bell_poly(args.n, args.r)
        if args.lam is not None and args.x is not None:
            value = value.evaluate(args.x, args.lam)
        elif args.lam is not None:
            value = value.substitute_inner(args.lam)
        elif args.x is not None:
            value = value.substitute_outer(args.x)
    else:
        if args.family == "bell":
            value = bell_poly(args.n)
        else:
            value = r_lah_bell_poly(args.n, args.r if args.family == "lb-r" else 0)
        if args.x is not None:
            value = value.evaluate(args.x)
    text = render_poly(value)
    if args.format == "json":
        params = {"family": args.family, "n": args.n, "r": args.r, "x": args.x, "lambda": args.lam}
        _emit(OutputRecord("poly", params, text, "value").to_json() + "\n")
    else:
        _emit(text + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = expand_suite_names(args.suite)
    overrides = {
        "total_max": args.total_max,
        "n_max": args.n_max,
        "m_max": args.m_max,
        "r_max": args.r_max,
        "order": args.order,
        "k_max": args.k_max,
    }
    try:
        bounds = {s: resolve_bounds(s, args.quick, overrides) for s in suites}
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    outcomes = run_suites(suites, bounds, jobs=args.jobs, inject_fault=args.inject_fault)
    passed = all(o.passed for o in outcomes)
    if args.format == "json":
        params = {"suite": args.suite, "quick": args.quick}
        _emit(verify_record(outcomes, params).to_json() + "\n")
    else:
        _emit(format_verify_report(outcomes))
    if not passed:
        logger.warning(f"First counterexample: {first_counterexample(outcomes)}")
        return EXIT_FAILED
    return EXIT_OK


def cmd_oracle(args) -> int:
    distribution = distribution_by_block_count(args.n)
    if args.k is not None:
        results = {"n": args.n, "k": args.k, "count": distribution.get(args.k, 0)}
        text = f"{results['count']}\n"
    else:
        results = {"n": args.n, "distribution": distribution, "total": sum(distribution.values())}
        text = format_distribution(args.n, distribution)
    if args.format == "json":
        _emit(OutputRecord("oracle", {"n": args.n, "k": args.k}, results, "value").to_json() + "\n")
    else:
        _emit(text)
    return EXIT_OK


def cmd_dobinski(args) -> int:
    if args.bell:
        if args.r or args.lam is not None:
            raise UnsupportedCombination("--bell takes neither --r nor --lambda")
        result = bell_dobinski_eval(args.n, args.x, args.eps, args.precision)
    else:
        result = dobinski_eval(args.n, args.r, args.x, args.lam, args.eps, args.precision)
    if args.format == "json":
        params = {"n": args.n, "r": args.r, "x": args.x, "lambda": args.lam, "bell": args.bell, "eps": args.eps}
        _emit(OutputRecord("dobinski", params, dobinski_fields(result), "value").to_json() + "\n")
    else:
        _emit(format_dobinski(result))
    return EXIT_OK


def _add_format(parser, choices=("text", "json"), default="text") -> None:
    parser.add_argument("--format", choices=choices, default=default, help=f"Output format (default {default})")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lah_bell", description="Lah, r-Lah and λ-analogue r-Lah numbers")
    sub = ap.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="Export a number triangle", epilog=BFILE_HELP)
    table.add_argument("kind", choices=TABLE_KINDS)
    table.add_argument("n_max", type=_nonneg_int)
    table.add_argument("--r", type=_nonneg_int, default=None, help="r for rlah and lambda-rlah")
    table.add_argument("--lambda", dest="lam", type=_rational, default=None, help="λ as p/q; omit for λ-polynomials")
    _add_format(table, ("csv", "json", "bfile"), "csv")
    table.set_defaults(handler=cmd_table)

    poly = sub.add_parser("poly", help="Print or evaluate a Bell-type polynomial")
    poly.add_argument("family", choices=POLY_FAMILIES)
    poly.add_argument("n", type=_nonneg_int)
    poly.add_argument("--r", type=_nonneg_int, default=0)
    poly.add_argument("--x", type=_rational, default=None, help="Evaluate at x (p/q)")
    poly.add_argument("--lambda", dest="lam", type=_rational, default=None, help="Evaluate at λ (p/q)")
    _add_format(poly)
    poly.set_defaults(handler=cmd_poly)

    verify = sub.add_parser("verify", help="Run identity verification suites")
    verify.add_argument("suite", choices=SUITE_NAMES + ("all",))
    verify.add_argument(
        "--total-max", type=_nonneg_int, default=None, help=f"Bound on n + m, cap {BOUND_CAPS['total_max']}"
    )
    verify.add_argument("--n-max", type=_nonneg_int, default=None, help=f"Cap {BOUND_CAPS['n_max']}")
    verify.add_argument("--m-max", type=_nonneg_int, default=None, help=f"Cap {BOUND_CAPS['m_max']}")
    verify.add_argument("--r-max", type=_nonneg_int, default=None, help=f"Cap {BOUND_CAPS['r_max']}")
    verify.add_argument("--order", type=_nonneg_int, default=None, help=f"Series order, cap {BOUND_CAPS['order']}")
    verify.add_argument("--k-max", type=_nonneg_int, default=None, help=f"Cap {BOUND_CAPS['k_max']}")
    verify.add_argument("--quick", action="store_true", help="Reduced default bounds")
    verify.add_argument("--jobs", type=_pos_int, default=DEFAULT_JOBS, help="Worker processes")
    verify.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    _add_format(verify)
    verify.set_defaults(handler=cmd_verify)

    oracle = sub.add_parser("oracle", help="Count ordered partitions by enumeration")
    oracle.add_argument("n", type=_nonneg_int, help=f"Set size, at most {ORACLE_MAX_N}")
    oracle.add_argument("--k", type=_nonneg_int, default=None, help="Only partitions into k blocks")
    _add_format(oracle)
    oracle.set_defaults(handler=cmd_oracle)

    dob = sub.add_parser("dobinski", help="Evaluate a Dobinski-type series at high precision")
    dob.add_argument("n", type=_nonneg_int)
    dob.add_argument("--r", type=_nonneg_int, default=0)
    dob.add_argument("--x", type=_rational, required=True, help="Positive rational p/q")
    dob.add_argument("--lambda", dest="lam", type=_rational, default=None, help="Positive rational p/q")
    dob.add_argument("--eps", type=_hp_literal, default=None, help="Target tail bound, e.g. 1e-20")
    dob.add_argument("--precision", type=_pos_int, default=None, help="Working precision in bits")
    dob.add_argument("--bell", action="store_true", help="Classical Dobinski series for φ_n(x)")
    _add_format(dob)
    dob.set_defaults(handler=cmd_dobinski)
    return ap


def main(argv=None) -> int:
    logging.basicConfig(
        level=getattr(logging, LOG_LEVEL.upper(), logging.INFO),
        format="%(asctime)s - %(levelname)s - %(message)s",
    )
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if args.command == "table" and args.kind in ("rlah", "lambda-rlah") and args.r is None:
        print(f"error: table {args.kind} needs --r", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.handler(args)
    except (UnsupportedCombination, DomainError) as e:
        logger.error(f"{args.command}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ValueError as e:
        logger.error(f"{args.command}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
