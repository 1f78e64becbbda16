#!/usr/bin/env python3
"""Run every identity suite at one set of bounds and summarize.

Equivalent to looping the `staralg check` subcommand over all suites; handy
for quick regression sweeps at larger bounds than the defaults.
"""

import argparse
import sys
from fractions import Fraction

from staralg.laguerre import (
    even_identity_report,
    generating_check,
    ode_check,
    orthogonality_check,
    recurrence_check,
    star_exp_check,
)
from staralg.mathieu import oracle_equivalence_scan
from staralg.poly import mi_zero
from staralg.report import Report
from staralg.weyl import interchange_check


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=1)
    parser.add_argument("--t", default="1")
    parser.add_argument("--degmax", type=int, default=4)
    parser.add_argument("--mmax", type=int, default=8)
    parser.add_argument("--kmax", type=int, default=4)
    parser.add_argument("--order", type=int, default=8)
    parser.add_argument("--quiet", action="store_true",
                        help="print only the per-suite summary lines")
    args = parser.parse_args()

    n = args.n
    zeros = mi_zero(n)
    genfun_report = Report()
    for k in range(args.kmax + 1):
        sub = generating_check(k, args.order)
        genfun_report.records.extend(sub.records)
        genfun_report.ok = genfun_report.ok and sub.ok

    suites = [
        ("ortho", orthogonality_check(n, zeros, args.degmax)),
        ("recur", recurrence_check(args.mmax)),
        ("ode", ode_check(args.mmax, args.kmax)),
        ("genfun", genfun_report),
        ("starexp", star_exp_check(zeros, min(args.order, 4))),
        ("even", even_identity_report(n, args.degmax)),
        ("interchange", interchange_check(n, args.degmax)),
        ("oracles", oracle_equivalence_scan(Fraction(args.t), n, args.degmax)),
    ]
    all_ok = True
    for name, report in suites:
        if not args.quiet:
            for record in report.records:
                print(record.line())
        status = "ok" if report.ok else "FAIL"
        print(f"# suite={name} records={len(report.records)} {status}", file=sys.stderr)
        all_ok = all_ok and report.ok
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
