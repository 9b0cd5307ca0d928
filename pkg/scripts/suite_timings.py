"""Run each verification suite once and report wall time and pass counts."""

from __future__ import annotations

import argparse
import time

from thicksl2.config import SUITES, SuiteConfig
from thicksl2.runner import run_suite


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rank-max", type=int, default=4)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()
    total = 0.0
    for suite in SUITES:
        cfg = SuiteConfig(suite=suite, rank_max=args.rank_max, jobs=args.jobs)
        start = time.perf_counter()
        reports = run_suite(cfg)
        elapsed = time.perf_counter() - start
        total += elapsed
        passed = sum(r.status == "pass" for r in reports)
        slowest = max(reports, key=lambda r: r.ms)
        print(f"{suite:<13} {passed:>4}/{len(reports):<4} {elapsed:7.2f}s  slowest {slowest.name} ({slowest.ms:.0f} ms)")
    print(f"{'total':<13} {'':>9} {total:7.2f}s")


if __name__ == "__main__":
    main()
