#!/usr/bin/env python3
"""Cross-validate the counting formulas against the brute-force census.

Runs the square, hexagonal, two general rational lattices and one
non-rational lattice, comparing well-rounded counts index by index.
"""

import argparse
import sys
import time

from wellround.general import count_wr_nonrational, count_wr_rational
from wellround.gram import GramForm
from wellround.hexagonal import a_hex
from wellround.scalar import Scalar
from wellround.square import a_square
from wellround.sublattices import wr_census_bruteforce


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=100)
    args = parser.parse_args()
    N = args.max

    cases = [
        ("square", GramForm.of(1, 0, 1), lambda g: a_square(N)),
        ("hexagonal", GramForm.of(2, 1, 2), lambda g: a_hex(N)),
        ("diag(1,2)", GramForm.of(1, 0, 2), lambda g: count_wr_rational(g, N)),
        ("[[2,1],[1,3]]", GramForm.of(2, 1, 3), lambda g: count_wr_rational(g, N)),
        (
            "diag(1,sqrt(2))",
            GramForm(Scalar(1), Scalar(0), Scalar(0, 1, 2)),
            lambda g: count_wr_nonrational(g, N),
        ),
    ]
    failures = 0
    for name, g, formula in cases:
        start = time.monotonic()
        census = wr_census_bruteforce(g, N).well_rounded_list()
        counts = list(formula(g))
        elapsed = time.monotonic() - start
        if counts == census:
            print(f"ok   {name:16s} n <= {N}  ({elapsed:.1f}s)")
        else:
            bad = next(i + 1 for i, (u, v) in enumerate(zip(counts, census)) if u != v)
            print(f"FAIL {name:16s} first mismatch at n = {bad}")
            failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
