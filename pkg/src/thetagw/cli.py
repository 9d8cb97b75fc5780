"""Command-line front end: evaluate invariants, run verification suites,
emit value tables.

Exit codes: 0 success, 1 verification failure, 2 usage error.  All values
are printed as exact rational strings; --float adds a decimal convenience
column without ever replacing the exact field.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .core import descendant_multisets, rational_str
from .invariants import InvariantQuery, evaluate
from .verify import SUITE_NAMES, Report, run_suite


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(json.dumps({"error": message}), file=sys.stderr)
        raise SystemExit(2)


def _parse_alphas(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"alphas must be a comma list of integers, got {text!r}")
    if any(v < 0 for v in values):
        raise UsageError("descendant exponents must be >= 0")
    return values


def _require_positive(name: str, value: int | None) -> None:
    if value is not None and value < 1:
        raise UsageError(f"{name} must be >= 1")


def _invariant_record(degree: int, h: int, parity: str, alphas: tuple[int, ...],
                      with_float: bool) -> dict:
    query = InvariantQuery(degree, h, 0 if parity == "even" else 1, alphas)
    value = evaluate(query)
    record = {
        "degree": degree,
        "h": h,
        "parity": parity,
        "alphas": list(alphas),
        "chi": query.chi,
        "value": rational_str(value),
    }
    if with_float:
        record["value_float"] = float(value)
    return record


def _emit_records(records: list[dict], fmt: str, with_float: bool) -> None:
    if fmt == "json":
        for record in records:
            print(json.dumps(record))
        return
    if fmt == "csv":
        header = ["degree", "h", "parity", "alphas", "chi", "value"]
        if with_float:
            header.append("value_float")
        writer = csv.writer(sys.stdout)
        writer.writerow(header)
        for record in records:
            row = [
                record["degree"],
                record["h"],
                record["parity"],
                ",".join(str(a) for a in record["alphas"]),
                record["chi"],
                record["value"],
            ]
            if with_float:
                row.append(record["value_float"])
            writer.writerow(row)
        return
    for record in records:
        fields = [
            f"degree={record['degree']}",
            f"h={record['h']}",
            f"parity={record['parity']}",
            "alphas=" + ",".join(str(a) for a in record["alphas"]),
            f"chi={record['chi']}",
            f"value={record['value']}",
        ]
        if with_float:
            fields.append(f"value_float={record['value_float']}")
        print(" ".join(fields))


def _cmd_invariant(args) -> int:
    if args.genus < 0:
        raise UsageError("genus must be >= 0")
    alphas = _parse_alphas(args.alphas)
    record = _invariant_record(args.degree, args.genus, args.parity, alphas, args.float)
    _emit_records([record], args.format, args.float)
    return 0


def _cmd_table(args) -> int:
    _require_positive("hmax", args.hmax)
    _require_positive("alpha-budget", args.alpha_budget)
    records = []
    for h in range(args.hmax + 1):
        for alphas in descendant_multisets(args.alpha_budget, args.alpha_budget):
            records.append(
                _invariant_record(args.degree, h, args.parity, alphas, args.float)
            )
    _emit_records(records, args.format, args.float)
    return 0


def _render_report(report: Report, fmt: str) -> None:
    if fmt == "json":
        payload = {
            "suite": report.suite,
            "passed": report.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "lhs": c.lhs, "rhs": c.rhs}
                for c in report.checks
            ],
            "coverage": {m: sorted(ops) for m, ops in sorted(report.coverage.items())},
        }
        print(json.dumps(payload))
        return
    if fmt == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["name", "passed", "lhs", "rhs"])
        for c in report.checks:
            writer.writerow([c.name, c.passed, c.lhs, c.rhs])
        return
    for c in report.checks:
        if c.passed:
            print(f"PASS {c.name}")
        else:
            print(f"FAIL {c.name} lhs={c.lhs} rhs={c.rhs}")
    print(
        f"suite={report.suite} checks={len(report.checks)} "
        f"failures={len(report.failures)}"
    )
    for module, ops in sorted(report.coverage.items()):
        print(f"coverage {module}: {', '.join(sorted(ops))}")


def _cmd_verify(args) -> int:
    for name in ("hmax", "kmax", "alpha_budget"):
        _require_positive(name.replace("_", "-"), getattr(args, name))
    report = run_suite(
        args.suite, hmax=args.hmax, kmax=args.kmax, alpha_budget=args.alpha_budget
    )
    _render_report(report, args.format)
    return 0 if report.passed else 1


def build_parser() -> _Parser:
    parser = _Parser(prog="thetagw", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    inv = sub.add_parser("invariant", help="evaluate one invariant")
    inv.add_argument("--degree", type=int, choices=(1, 2), required=True)
    inv.add_argument("--genus", type=int, required=True, help="genus h of the base curve")
    inv.add_argument("--parity", choices=("even", "odd"), required=True)
    inv.add_argument("--alphas", default="", help="comma list of descendant exponents")
    inv.add_argument("--format", choices=("text", "json", "csv"), default="text")
    inv.add_argument("--float", action="store_true", help="add a decimal column")
    inv.set_defaults(func=_cmd_invariant)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("--suite", choices=SUITE_NAMES, required=True)
    ver.add_argument("--hmax", type=int, default=None)
    ver.add_argument("--kmax", type=int, default=None)
    ver.add_argument("--alpha-budget", dest="alpha_budget", type=int, default=None)
    ver.add_argument("--format", choices=("text", "json", "csv"), default="text")
    ver.set_defaults(func=_cmd_verify)

    tab = sub.add_parser("table", help="emit a grid of invariant values")
    tab.add_argument("--degree", type=int, choices=(1, 2), required=True)
    tab.add_argument("--hmax", type=int, required=True)
    tab.add_argument("--parity", choices=("even", "odd"), required=True)
    tab.add_argument("--alpha-budget", dest="alpha_budget", type=int, default=2)
    tab.add_argument("--format", choices=("csv", "json"), default="csv")
    tab.add_argument("--float", action="store_true")
    tab.set_defaults(func=_cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
