#!/usr/bin/env python3
"""Print the q-number tables, their q -> 1 limits and the as-printed Euler-Bernoulli discrepancies."""

import argparse

from qbernoulli.identities import run_check
from qbernoulli.qnumbers import NumberFamily, numbers_recurrence, tangent_numbers


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    args = ap.parse_args()

    for family in (NumberFamily.BERNOULLI, NumberFamily.EULER, NumberFamily.GENOCCHI):
        print(f"## {family.value}")
        for n, v in enumerate(numbers_recurrence(family, args.max_n).values):
            print(f"  {n:2d}  {str(v):60}  q->1: {v.limit_q1()}")
    print("## tangent (odd entries)")
    t = tangent_numbers(max(args.max_n, 1))
    for n in range(1, len(t), 2):
        print(f"  {n:2d}  {str(t[n]):60}  q->1: {t[n].limit_q1()}")

    print("## S-P2 as printed: discrepancy lhs - rhs")
    for n in range(3):
        for m in (1, 2, 3):
            d = run_check("sp2_as_printed", n=n, m=m).discrepancy
            print(f"  n={n} m={m}: {d}")


if __name__ == "__main__":
    main()
