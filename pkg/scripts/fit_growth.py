#!/usr/bin/env python3
"""Report the growth-law residuals of the counting pipelines.

Prints, for the square and hexagonal lattices, the summatory count A(x)
against c1 x log x + c2 x at the requested checkpoints together with the
two error-term normalizations (x^(3/4) log x and sqrt(x)).
"""

import argparse
import sys

from wellround import asympt
from wellround.hexagonal import a_hex
from wellround.square import a_square


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--checkpoints",
        default="10000,100000,1000000",
        help="comma-separated evaluation points",
    )
    args = parser.parse_args()
    checkpoints = [int(float(c)) for c in args.checkpoints.split(",")]
    N = max(checkpoints)

    for name, series, model in (
        ("square", a_square, asympt.square_model()),
        ("hexagonal", a_hex, asympt.hexagonal_model()),
    ):
        print(f"{name}: c1 = {model.c1:.7f}, c2 = {model.c2:.7f}")
        rows = asympt.model_report(series(N), model, checkpoints)
        header = ["x", "A(x)", "model", "residual", "res/x^0.75 log x", "res/sqrt x"]
        print("  " + "  ".join(f"{h:>16s}" for h in header))
        for r in rows:
            print(
                "  "
                + f"{r['x']:>16d}  {r['A']:>16d}  {r['model']:>16.1f}"
                + f"  {r['residual']:>16.1f}  {r['residual_over_x_power']:>16.5f}"
                + f"  {r['residual_over_sqrt_x']:>16.5f}"
            )
    return 0


if __name__ == "__main__":
    sys.exit(main())
