"""Command line front end.

    pbern table --nmax 20 --pmax 10 --method all --format csv
    pbern verify --suite all

Exit status: 0 on success, 1 when routes disagree or a check fails,
2 on invalid flags.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import verify as V
from .exact import rat_text
from .pbernoulli import PBernoulliTable, Route, build_table

METHODS = [r.value for r in Route] + ["all"]
SUITES = ["pde", "diffrec", "identities", "cross", "all"]


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pbern", description="Exact p-Bernoulli numbers.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--nmax", type=_nonneg, default=20, help="largest n (default 20)")
        p.add_argument("--pmax", type=_nonneg, default=10, help="largest p (default 10)")
        p.add_argument("--output", "-o", default="-", help="output path, '-' for stdout")

    table = sub.add_parser("table", help="emit the table of B_{n,p}")
    common(table)
    table.add_argument("--method", required=True, choices=METHODS)
    table.add_argument("--format", required=True, choices=["csv", "json"])

    check = sub.add_parser(
        "verify",
        help="run verification suites",
        description=(
            "pde: G to z^pmax and t^nmax; diffrec: every route, p <= pmax, t^nmax; "
            "identities: binomial-harmonic for n <= max(nmax, 2), polynomial "
            "identities for p <= pmax; cross: all routes on the nmax x pmax table."
        ),
    )
    common(check)
    check.add_argument("--suite", required=True, choices=SUITES)
    return parser


def format_csv(table: PBernoulliTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "p", "value"])
    for n, p, v in table.entries():
        writer.writerow([n, p, rat_text(v)])
    return buf.getvalue()


def format_json(table: PBernoulliTable, method: str) -> str:
    doc = {
        "nmax": table.nmax,
        "pmax": table.pmax,
        "method": method,
        "entries": [
            {"n": n, "p": p, "num": str(v.numerator), "den": str(v.denominator)}
            for n, p, v in table.entries()
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_csv(text: str) -> dict[tuple[int, int], Fraction]:
    rows = csv.DictReader(io.StringIO(text))
    return {(int(r["n"]), int(r["p"])): Fraction(r["value"]) for r in rows}


def parse_json(text: str) -> dict[tuple[int, int], Fraction]:
    doc = json.loads(text)
    return {
        (e["n"], e["p"]): Fraction(int(e["num"]), int(e["den"])) for e in doc["entries"]
    }


def _emit(text: str, output: str) -> None:
    if output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_table(args) -> int:
    if args.method == "all":
        tables = {r: build_table(r, args.nmax, args.pmax) for r in Route}
        report = V.compare_tables(tables)
        if not report.passed:
            print(report.summary(), file=sys.stderr)
            return 1
        table = tables[Route.RECURRENCE]
    else:
        table = build_table(Route(args.method), args.nmax, args.pmax)
    if args.format == "csv":
        _emit(format_csv(table), args.output)
    else:
        _emit(format_json(table, args.method), args.output)
    return 0


def run_suites(suite: str, nmax: int, pmax: int) -> list[V.VerificationReport]:
    reports = []
    if suite in ("pde", "all"):
        reports.append(V.verify_pde(pmax + 1, max(nmax + 1, 2)))
    if suite in ("diffrec", "all"):
        reports.extend(V.verify_diff_recurrence(pmax, nmax + 1, r) for r in Route)
    if suite in ("identities", "all"):
        reports.append(V.verify_identity_binomial_harmonic(max(nmax, 2)))
        reports.append(V.verify_identity_laurent(pmax))
        reports.append(V.verify_identity_collapse(pmax))
    if suite in ("cross", "all"):
        reports.append(V.cross_validate(nmax, pmax))
    return reports


def cmd_verify(args) -> int:
    reports = run_suites(args.suite, args.nmax, args.pmax)
    failures = sum(len(r.failures) for r in reports)
    lines = [r.summary() for r in reports]
    lines.append(
        f"total: {sum(r.cases_run for r in reports)} cases, {failures} failures"
    )
    _emit("\n".join(lines) + "\n", args.output)
    return 1 if failures else 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "table":
        return cmd_table(args)
    return cmd_verify(args)


if __name__ == "__main__":
    sys.exit(main())
