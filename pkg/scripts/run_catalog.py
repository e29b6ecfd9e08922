"""Run the default fixture suite and print one status line per fixture.

usage: python3 scripts/run_catalog.py [--parallel] [--json OUT]
"""
import argparse
import sys
import time

from bkn_forge.catalog import default_suite, run_fixtures
from bkn_forge.config import RunConfig
from bkn_forge.serialize import dumps


def main() -> int:
    p = argparse.ArgumentParser()
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--json", help="also write the full JSON reports here")
    args = p.parse_args()
    start = time.perf_counter()
    reports = run_fixtures(default_suite(), config=RunConfig(parallel=args.parallel))
    elapsed = time.perf_counter() - start
    for r in reports:
        failed = [c.name for c in r.checks if not c.passed]
        print(f"{'PASS' if r.passed else 'FAIL'} {r.name:<16} {len(r.checks):>2} checks"
              + (f"  failed: {', '.join(failed)}" if failed else ""))
    ok = all(r.passed for r in reports)
    print(f"{sum(r.passed for r in reports)}/{len(reports)} fixtures pass in {elapsed:.1f}s")
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(dumps({"reports": [r.to_dict() for r in reports]}))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
