#!/usr/bin/env python3
"""Run the verification sweep and summarize per-check outcomes.

Example:
    python3 scripts/run_sweep.py --g-max 20 --radius 12 --jobs 4 --out report.json
"""

import argparse
import collections
import json
import sys

from k3lattice.cli import _jsonable
from k3lattice.verify import ALL_CHECKS, SweepConfig, run_sweep


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--g-max", type=int, default=10)
    parser.add_argument("--radius", type=int, default=10)
    parser.add_argument("--jobs", type=int, default=1, help="0 = one per core")
    parser.add_argument("--checks", default=None, help="comma-separated subset")
    parser.add_argument("--out", default=None, help="write the full JSON report here")
    args = parser.parse_args()

    checks = frozenset(args.checks.split(",")) if args.checks else frozenset(ALL_CHECKS)
    cfg = SweepConfig(args.g_max, args.radius, checks, args.jobs)
    results = run_sweep(cfg)

    tally = collections.Counter()
    for r in results:
        tally[(r.check_id, r.passed)] += 1
    width = max(len(c) for c in checks)
    for check in sorted(checks):
        ok, bad = tally[(check, True)], tally[(check, False)]
        flag = "ok" if bad == 0 else f"{bad} FAILED"
        print(f"{check:<{width}}  {ok:4d} passed  {flag}")

    failed = [r for r in results if not r.passed]
    for r in failed:
        print(f"FAIL {r.check_id} at (g,d)=({r.g},{r.d}): {r.certificate}")

    if args.out:
        report = {
            "g_max": args.g_max,
            "box_radius": args.radius,
            "checks": sorted(checks),
            "results": [
                {
                    "check_id": r.check_id,
                    "g": r.g,
                    "d": r.d,
                    "passed": r.passed,
                    "certificate": _jsonable(r.certificate),
                }
                for r in results
            ],
        }
        with open(args.out, "w") as fh:
            json.dump(report, fh, sort_keys=True, indent=2)
        print(f"wrote {args.out}")

    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
