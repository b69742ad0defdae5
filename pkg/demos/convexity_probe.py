"""Sampled convexity checking of membership families over the real line.

A set over Euclidean space is convex when along every segment its truth
endpoints never dip below the worse end (quasi-concave) and its
indeterminacy/falsity endpoints never rise above the worse end
(quasi-convex). The checkers falsify by sampling segments from a box, so a
clean run reports "no-violation-found" rather than claiming a proof, and any
violation comes with a replayable witness.

Run:  python demos/convexity_probe.py
"""

import numpy as np

from ins import (
    Box,
    bimodal,
    check_convex,
    check_strongly_convex,
    gaussian,
    intersect_functional,
    triangular,
)


def describe(title, report):
    print(f"\n{title}")
    print(f"  verdict: {report.verdict}   samples checked: {report.samples_checked}")
    w = report.witness
    if w:
        print(f"  witness: component={w.component} lambda={w.lam:.4f}")
        print(f"           x1={w.x1} x2={w.x2}")
        print(f"           lhs={w.lhs:.6f} rhs={w.rhs:.6f}")


# A single triangular bump is convex: its truth ridge has no dips.
tri = triangular(center=0.0, width=1.0)
describe(
    "triangular bump on [-2, 2]",
    check_convex(tri, Box(((-2.0, 2.0),)), trials=1000, lambda_grid=11, seed=42),
)

# Two separated bumps are not: the segment between the modes crosses a dead
# zone. The witness pins the exact segment and mixing weight.
two_modes = bimodal(separation=4.0)
report = check_convex(two_modes, Box(((-3.0, 3.0),)), trials=1000, lambda_grid=11, seed=0)
describe("bimodal bumps on [-3, 3]", report)

# Witnesses replay: evaluating the membership at the witness segment
# reproduces the reported comparison.
w = report.witness
mid = w.lam * np.array(w.x1) + (1 - w.lam) * np.array(w.x2)
print("  replayed truth.lo at the mixture point:",
      two_modes.membership(mid).truth.lo)

# Strong convexity demands strict improvement at interior mixing weights.
# The triangular bump fails it on its flat tails; a Gaussian bump passes.
describe(
    "triangular bump, strict check",
    check_strongly_convex(tri, Box(((-2.0, 2.0),)), trials=1000, seed=3),
)
describe(
    "gaussian bump on [-1, 1], strict check",
    check_strongly_convex(gaussian(0.0, 1.0), Box(((-1.0, 1.0),)), trials=1000, seed=5),
)

# Intersection preserves convexity: min of truth ridges, max of the doubt
# valleys. Checking the intersection of two offset bumps finds nothing.
both = intersect_functional(triangular(0.0, 1.0), triangular(0.5, 1.0))
describe(
    "intersection of two offset triangular bumps",
    check_convex(both, Box(((-2.0, 2.0),)), trials=2000, lambda_grid=11, seed=9),
)

# The same checks run in higher dimensions; families become radial bumps.
describe(
    "gaussian bump on the plane, strict check",
    check_strongly_convex(
        gaussian(0.0, 1.0, dimension=2),
        Box(((-1.0, 1.0), (-1.0, 1.0))),
        trials=500,
        lambda_grid=7,
        seed=11,
    ),
)
