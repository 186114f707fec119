#!/usr/bin/env python3
"""Tabulate the lower-bound families and the online family against their closed forms."""

import argparse
import sys

from cdawg_sens.families import KINDS, FamilySpec, family_row, rows_to_tsv


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-m", type=int, default=50)
    ap.add_argument("--kind", choices=KINDS, action="append")
    args = ap.parse_args()

    rows = []
    for kind in args.kind or KINDS:
        for m in range(1, args.max_m + 1):
            ks = range(m) if kind == "online" else [0]
            rows += [family_row(FamilySpec(kind, m, k)) for k in ks]
    sys.stdout.write(rows_to_tsv(rows))
    bad = [r for r in rows if not r.match]
    print(f"# {len(rows) - len(bad)}/{len(rows)} rows match", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
