#!/usr/bin/env python3
"""Run the identity suite and write a JSON report plus a per-check summary."""

import argparse
import json
import sys
from collections import Counter
from pathlib import Path

from qbernoulli.identities import SuiteConfig, run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("results/suite_report.json"))
    ap.add_argument("--max-n", type=int, default=SuiteConfig.max_n)
    ap.add_argument("--sp-max-n", type=int, default=SuiteConfig.sp_max_n)
    args = ap.parse_args()

    report = run_suite(SuiteConfig(max_n=args.max_n, sp_max_n=args.sp_max_n))
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps(report.to_json(), indent=2) + "\n")

    totals, fails = Counter(), Counter()
    for r in report.results:
        totals[r.name] += 1
        fails[r.name] += not r.passed
    print(f"{'check':28} {'runs':>5} {'fail':>5}  gating")
    gating = {r.name: r.gating for r in report.results}
    for name in totals:
        print(f"{name:28} {totals[name]:5d} {fails[name]:5d}  {'yes' if gating[name] else 'no'}")
    print(report.summary)
    print(f"report written to {args.out}")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
