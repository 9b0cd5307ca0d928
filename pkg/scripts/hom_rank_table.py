"""Tabulate graded hom ranks by the formula and enumeration routes and flag disagreements."""

from __future__ import annotations

import argparse
import itertools
import time

from thicksl2.udot import hom_rank


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--power-max", type=int, default=2)
    parser.add_argument("--n-range", type=int, default=2)
    parser.add_argument("--degree", type=int, default=10)
    args = parser.parse_args()
    start = time.perf_counter()
    mismatches = 0
    for a, b, d in itertools.product(range(args.power_max + 1), repeat=3):
        for n in range(-args.n_range, args.n_range + 1):
            formula, enum = hom_rank(a, b, d, n, args.degree)
            mismatches += formula != enum
            flag = "" if formula == enum else "   MISMATCH " + str(enum)
            print(f"a={a} b={b} delta={d} n={n:+d}: {formula}{flag}")
    print(f"{mismatches} mismatches, {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    main()
