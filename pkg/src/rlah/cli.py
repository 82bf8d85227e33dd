"""Command line front end.

Data goes to stdout as JSON, RFC 4180 CSV or a plain table; diagnostics go
to stderr. Exit codes: 0 success, 1 identity failure or enclosure
violation, 2 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys
from fractions import Fraction

from . import tables as T
from .dobinski import dobinski_sum
from .exact_core import frac_decimal
from .oracle import ORACLE_CAP, enumerate_ordered_partitions
from .poisson_lab import MAX_SAMPLER_ALPHA, MAX_STATISTIC_N, PoissonSpec, mc_moment
from .verify import SUITE_IDS, Z_GATE, GridError, VerifyConfig, all_passed, run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

TRIANGLE_FAMILIES = ("lah", "rlah", "s1", "s2", "s2shift")
SEQUENCE_FAMILIES = ("bell", "rbell", "lahbell", "rlahbell")
TABLE_N_CAP = 200


class UsageError(Exception):
    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


def rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}")


def nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def positive_int(text: str) -> int:
    value = nonneg_int(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rlah",
        description="r-Lah numbers, r-extended Lah-Bell numbers/polynomials and identity checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="print a number triangle or sequence")
    p.add_argument("--family", required=True, choices=TRIANGLE_FAMILIES + SEQUENCE_FAMILIES)
    p.add_argument("--n-max", type=nonneg_int, default=10)
    p.add_argument("--r", type=nonneg_int, default=0)
    p.add_argument("--x", type=int, default=None, help="integer shift for s2shift (default 2r)")
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")

    p = sub.add_parser("verify", help="run identity suites")
    p.add_argument("--suite", default="all", help="'all' or a comma-separated list of suite ids")
    p.add_argument("--n-max", type=nonneg_int)
    p.add_argument("--r-max", type=nonneg_int)
    p.add_argument("--order", type=nonneg_int)
    p.add_argument("--tol", type=rational)
    p.add_argument("--samples", type=positive_int)
    p.add_argument("--seed", type=nonneg_int)
    p.add_argument("--format", choices=("json", "pretty"), default="json")
    p.add_argument("--timings", action="store_true", help="include elapsed times (not deterministic)")

    p = sub.add_parser("dobinski", help="certified Dobinski-series enclosure of B^L_{n,r}(x)")
    p.add_argument("--n", type=nonneg_int, required=True)
    p.add_argument("--r", type=nonneg_int, default=0)
    p.add_argument("--x", type=rational, default=Fraction(1))
    p.add_argument("--tol", type=rational, default=Fraction(1, 10**12))
    p.add_argument("--decimal-digits", type=positive_int, default=30)

    p = sub.add_parser("poisson", help="rising factorial moment of a shifted Poisson variable")
    p.add_argument("--alpha", type=rational, required=True)
    p.add_argument("--n", type=nonneg_int, required=True)
    p.add_argument("--r", type=nonneg_int, default=0)
    p.add_argument("--samples", type=positive_int, default=10**6)
    p.add_argument("--seed", type=nonneg_int, default=42)
    p.add_argument("--workers", type=positive_int, default=1)
    p.add_argument("--tol", type=rational, default=Fraction(1, 10**12))
    p.add_argument("--decimal-digits", type=positive_int, default=None)

    p = sub.add_parser("oracle", help="brute-force ordered-block partition counts")
    p.add_argument("--n", type=nonneg_int, required=True)
    p.add_argument("--r", type=nonneg_int, default=0)
    return parser


# -- table ---------------------------------------------------------------


def _build_table(args):
    n_max, r = args.n_max, args.r
    if n_max > TABLE_N_CAP:
        raise UsageError("--n-max", f"must be <= {TABLE_N_CAP}")
    fam = args.family
    if fam == "lah":
        return T.lah_triangle(n_max)
    if fam == "rlah":
        return T.r_lah_triangle(n_max, r)
    if fam == "s1":
        return T.stirling1_triangle(n_max)
    if fam == "s2":
        return T.stirling2_triangle(n_max)
    if fam == "s2shift":
        return T.stirling2_shifted_triangle(n_max, 2 * r if args.x is None else args.x)
    if fam == "bell":
        return T.bell_numbers(n_max)
    if fam == "rbell":
        return T.r_bell_numbers(n_max, r)
    if fam == "lahbell":
        return T.lah_bell_numbers(n_max)
    return T.r_lah_bell_numbers(n_max, r)


def _emit_table(table, args, out) -> None:
    is_triangle = isinstance(table, T.NumberTriangle)
    if args.format == "json":
        doc = {"family": args.family, "r": args.r, "n_max": args.n_max}
        if args.family == "s2shift":
            doc["x"] = table.shift_x
        if is_triangle:
            doc["rows"] = [list(row) for row in table.rows]
        else:
            doc["values"] = list(table.values)
        out.write(json.dumps(doc) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        if is_triangle:
            writer.writerow(["n", "k", "value"])
            for n, row in enumerate(table.rows):
                for k, v in enumerate(row):
                    writer.writerow([n, k, v])
        else:
            writer.writerow(["n", "value"])
            for n, v in enumerate(table.values):
                writer.writerow([n, v])
        out.write(buf.getvalue())
    else:
        if is_triangle:
            for n, row in enumerate(table.rows):
                out.write(f"{n:>3}: " + " ".join(str(v) for v in row) + "\n")
        else:
            for n, v in enumerate(table.values):
                out.write(f"{n:>3}: {v}\n")


def cmd_table(args, out, err) -> int:
    _emit_table(_build_table(args), args, out)
    return EXIT_OK


# -- verify --------------------------------------------------------------


def cmd_verify(args, out, err) -> int:
    if args.suite == "all":
        suites: tuple[str, ...] = ()
    else:
        suites = tuple(s.strip() for s in args.suite.split(",") if s.strip())
        unknown = [s for s in suites if s not in SUITE_IDS]
        if unknown or not suites:
            raise UsageError("--suite", f"unknown suite(s) {unknown}; choose from {', '.join(SUITE_IDS)}")
    config = VerifyConfig(
        suites=suites,
        n_max=args.n_max,
        r_max=args.r_max,
        order=args.order,
        tol=args.tol,
        samples=args.samples,
        seed=args.seed,
    )
    try:
        reports = run_all(config)
    except GridError as exc:
        raise UsageError(exc.flag or "--suite", str(exc))
    ok = all_passed(reports)
    for rep in reports:
        err.write(f"[{rep.verdict:>13}] {rep.suite} ({rep.cases} cases, {rep.elapsed:.2f}s)\n")
    if args.format == "json":
        doc = {
            "reports": [rep.to_json(include_timing=args.timings) for rep in reports],
            "verdict": "pass" if ok else "fail",
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        for rep in reports:
            out.write(f"{rep.suite:<16} {rep.verdict:<14} cases={rep.cases}\n")
        out.write(f"overall: {'pass' if ok else 'fail'}\n")
    return EXIT_OK if ok else EXIT_FAIL


# -- dobinski / poisson / oracle -----------------------------------------


def cmd_dobinski(args, out, err) -> int:
    if args.x <= 0:
        raise UsageError("--x", "must be positive")
    if args.tol <= 0:
        raise UsageError("--tol", "must be positive (a zero tolerance never terminates)")
    res = dobinski_sum(args.n, args.r, args.x, args.tol)
    out.write(json.dumps(res.to_json(args.decimal_digits), indent=2) + "\n")
    if not res.contains_exact:
        err.write("enclosure does not contain the exact value\n")
        return EXIT_FAIL
    return EXIT_OK


def cmd_poisson(args, out, err) -> int:
    if not 0 < args.alpha <= MAX_SAMPLER_ALPHA:
        raise UsageError("--alpha", f"must satisfy 0 < alpha <= {MAX_SAMPLER_ALPHA}")
    if args.n > MAX_STATISTIC_N:
        raise UsageError("--n", f"must be <= {MAX_STATISTIC_N}")
    if args.seed >= 2**64:
        raise UsageError("--seed", "must fit in 64 bits")
    if args.tol <= 0:
        raise UsageError("--tol", "must be positive")
    spec = PoissonSpec(args.alpha, seed=args.seed, samples=args.samples)
    rep = mc_moment(args.n, args.r, spec, args.tol, workers=args.workers)
    doc = rep.to_json()
    doc["workers"] = args.workers
    doc["seed"] = args.seed
    if args.decimal_digits:
        doc["decimal"] = {
            "exact_value": frac_decimal(rep.exact_value, args.decimal_digits),
            "series_value": [
                frac_decimal(rep.series_value.lo, args.decimal_digits),
                frac_decimal(rep.series_value.hi, args.decimal_digits),
            ],
        }
    out.write(json.dumps(doc, indent=2) + "\n")
    status = EXIT_OK
    if rep.exact_value not in rep.series_value:
        err.write("series enclosure does not contain the exact moment\n")
        status = EXIT_FAIL
    if abs(rep.z_score) > Z_GATE:
        err.write(f"Monte Carlo estimate is {rep.z_score:.2f} sigma from the exact moment\n")
        status = EXIT_FAIL
    return status


def cmd_oracle(args, out, err) -> int:
    if args.n + args.r > ORACLE_CAP:
        raise UsageError("--n/--r", f"oracle cap exceeded: n + r must be <= {ORACLE_CAP}")
    count = enumerate_ordered_partitions(args.n, args.r)
    out.write(json.dumps(count.to_json()) + "\n")
    return EXIT_OK


COMMANDS = {
    "table": cmd_table,
    "verify": cmd_verify,
    "dobinski": cmd_dobinski,
    "poisson": cmd_poisson,
    "oracle": cmd_oracle,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return COMMANDS[args.command](args, out, err)
    except UsageError as exc:
        err.write(f"{parser.prog} {args.command}: error: {exc}\n")
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())
