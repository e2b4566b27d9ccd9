"""Numerical Einstein curvature of the maximal negative caterpillars, per spine order.

The sign comes from the exact classifier; the power-iteration value only gives
the size of the (positive) curvature.
"""

from __future__ import annotations

import sys

from tree_einstein.classify import classify_caterpillar, einstein_metric
from tree_einstein.golden import MAXIMAL_NEGATIVE
from tree_einstein.trees import build_caterpillar


def main() -> int:
    print(f"{'m':>3}  {'param':<28} {'sign':<9} {'kappa':>12} {'residual':>9}")
    for m, tops in MAXIMAL_NEGATIVE.items():
        for a in tops:
            sign = classify_caterpillar(a).sign
            em = einstein_metric(build_caterpillar(a))
            print(f"{m:>3}  {','.join(map(str, a)):<28} {str(sign):<9} {em.curvature:>12.6g} {em.residual_bound:>9.1e}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
