"""Print Littlewood-Richardson expansions of pi_alpha pi_beta for all |alpha|, |beta| <= W."""

from __future__ import annotations

import argparse

from thicksl2.partitions import partitions_up_to
from thicksl2.symfun import lr_product


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--weight", type=int, default=3)
    args = parser.parse_args()
    shapes = [p for p in partitions_up_to(args.weight) if p]
    for i, al in enumerate(shapes):
        for be in shapes[i:]:
            terms = sorted(lr_product(al, be).items())
            rhs = " + ".join(f"{c}*{g}" if c != 1 else str(g) for g, c in terms)
            print(f"{al} * {be} = {rhs}")


if __name__ == "__main__":
    main()
