#!/usr/bin/env python3
"""Survey the plane-field homotopy criterion over torus knot embeddings.

For each coprime pair 2 <= p < q <= bound and each sign eps, build the
stabilization plan that realizes the surgered torus knot with contact framing,
compute the theta invariant induced on the boundary Brieskorn sphere, and
compare it with the theta invariant of the Milnor fiber filling.  Rows where
the two agree are the candidate homotopic pairs.
"""

import argparse
import math

from steinkit import criteria
from steinkit.errors import ExcludedCase


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bound", type=int, default=10)
    args = parser.parse_args()

    homotopic = []
    for eps in (1, -1):
        print(f"eps = {eps:+d}")
        for p in range(2, args.bound + 1):
            for q in range(p + 1, args.bound + 1):
                if math.gcd(p, q) != 1:
                    continue
                try:
                    report = criteria.prop_theta_check(p, q, eps)
                except ExcludedCase as exc:
                    print(f"  ({p},{q}): excluded ({exc})")
                    continue
                flag = " <- homotopic" if report.homotopic else ""
                print(
                    f"  ({p},{q}) "
                    f"theta_embed={report.theta_embed} "
                    f"theta_milnor={report.theta_milnor} "
                    f"b2%3={report.b2_mod3}{flag}"
                )
                if report.homotopic:
                    homotopic.append((p, q, eps))
    print("homotopic cases:", homotopic or "none")


if __name__ == "__main__":
    main()
