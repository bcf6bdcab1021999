#!/usr/bin/env python3
"""Print the trigonometric chain table for a sweep of coefficient sizes.

For each stage (cos sqrt, sinc sqrt, three-halves form) the script shows
the boundary supremum of |u - 1| next to the disk bound |a| / (4 kappa)
and the radius where subordination to the affine disk target would start
to hold.

Usage:
    python scripts/trig_chain_table.py [--steps 9]
"""

import argparse

import numpy as np

from besselsub.bessel import ClosedFormTag, closed_form_eval
from besselsub.geometry import grid_supremum
from besselsub.series import EvaluationGrid

STAGES = (
    ("cos sqrt", ClosedFormTag.COS_SQRT),
    ("sinc sqrt", ClosedFormTag.SINC_SQRT),
    ("3/2 trig", ClosedFormTag.THREE_HALVES_TRIG),
)


def stage_supremum(tag, rho: float, angles: int = 1024) -> float:
    grid = EvaluationGrid((rho,), angles)
    sup, _ = grid_supremum(lambda z: np.abs(closed_form_eval(tag, z) - 1.0),
                           grid)
    return sup


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--steps", type=int, default=9,
                        help="number of |a| values in (0, 1/2)")
    args = parser.parse_args()

    print(f"{'stage':>10s}  {'kappa':>6s}  {'sup |u-1|':>12s}  "
          f"{'bound/|a|':>10s}")
    sups = {}
    for label, tag in STAGES:
        kappa = tag.parameters.kappa
        sups[label] = stage_supremum(tag, 0.9999)
        print(f"{label:>10s}  {kappa:6.2f}  {sups[label]:12.8f}  "
              f"{1.0 / (4.0 * kappa):10.6f}")

    print()
    print(f"{'|a|':>6s}  " + "  ".join(f"{label + ' ok':>12s}"
                                       for label, _ in STAGES))
    for a in np.linspace(0.05, 0.495, args.steps):
        cells = []
        for label, tag in STAGES:
            bound = a / (4.0 * tag.parameters.kappa)
            cells.append(f"{str(sups[label] < bound):>12s}")
        print(f"{a:6.3f}  " + "  ".join(cells))

    print()
    print("largest rho where each stage satisfies its own |a|/(4 kappa) "
          "bound with a = 0.49:")
    for label, tag in STAGES:
        bound = 0.49 / (4.0 * tag.parameters.kappa)
        lo, hi = 0.01, 0.9999
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            if stage_supremum(tag, mid, angles=512) < bound:
                lo = mid
            else:
                hi = mid
        print(f"{label:>10s}: rho < {lo:.6f}")


if __name__ == "__main__":
    main()
