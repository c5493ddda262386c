"""Run a named identity suite and print one line per check.

    python3 scripts/run_core_suite.py [--suite core|full] [--seed 42] [--report out.json]
"""

import argparse
import json
import sys
import time

from mocktheta.verify.suites import SUITES, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--suite", choices=sorted(SUITES), default="core")
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--report", help="write all reports to this JSON file")
    args = ap.parse_args()

    start = time.perf_counter()

    def progress(entry, r):
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {entry.id:12s} {json.dumps(entry.params):24s} max {r.max_residual:.2e}  tol {r.tol:.0e}", flush=True)

    reports = run_suite(args.suite, args.seed, progress=progress)
    failed = sum(not r.passed for r in reports)
    print(f"{len(reports) - failed}/{len(reports)} passed in {time.perf_counter() - start:.1f}s")
    if args.report:
        with open(args.report, "w") as fh:
            json.dump([r.to_dict() for r in reports], fh, indent=2)
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
