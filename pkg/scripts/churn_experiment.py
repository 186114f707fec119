#!/usr/bin/env python3
"""Leftward rebuild churn on T_m: per-transition size jumps and the log-log growth fit."""

import argparse
import sys

from cdawg_sens.churn import churn_quadratic_check, growth_exponent


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-m", type=int, default=20)
    ap.add_argument("--fit", default="4,8,16", help="m values for the slope fit")
    args = ap.parse_args()

    checks = {}
    print("m\tn\ttransition_churn\t9m^2\ttransition_edge_churn\ttotal_churn")
    for m in range(1, args.max_m + 1):
        c = checks[m] = churn_quadratic_check(m)
        print(f"{m}\t{c.n}\t{c.transition_churn}\t{9 * m * m}\t{c.transition_edge_churn}\t{c.total_churn}")
    ms = [int(x) for x in args.fit.split(",")]
    for m in ms:
        checks.setdefault(m, churn_quadratic_check(m))
    slope = growth_exponent(ms, [checks[m].transition_churn for m in ms])
    print(f"# slope over {ms}: {slope:.4f}")
    return 0 if abs(slope - 2.0) <= 0.1 else 1


if __name__ == "__main__":
    sys.exit(main())
