#!/usr/bin/env python3
"""Run the full check suite over {a,b}^<=12 and {a,b,c}^<=8 and save the reports as JSON."""

import argparse
import json
import sys
import time
from pathlib import Path

from cdawg_sens.sensitivity import sweep


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--ab-len", type=int, default=12)
    ap.add_argument("--abc-len", type=int, default=8)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    failures = 0
    for alpha, n in (("ab", args.ab_len), ("abc", args.abc_len)):
        t0 = time.perf_counter()
        rep = sweep(alpha, n, checks=["all"], cross_check=True, spell=True, jobs=args.jobs)
        elapsed = time.perf_counter() - t0
        path = args.out / f"sweep_{alpha}_{n}.json"
        path.write_text(json.dumps(rep.to_dict(), indent=2, sort_keys=True) + "\n")
        print(rep.summary())
        print(f"# {elapsed:.1f} s, written to {path}\n")
        failures += rep.failures
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
