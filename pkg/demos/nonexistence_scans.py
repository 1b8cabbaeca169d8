"""Closed-form scans: which candidate surfaces can satisfy the equation at all.

Three independent suites, each reducing a family of candidate surfaces to a
trigonometric-polynomial identity in the screw parameter t and asking whether
every coefficient can vanish:

* helicoidal ........ genuinely screw-invariant surfaces (pitch h != 0) for
                      the weighted-curvature equation: some coefficient always
                      survives, so none exist, for any exponent and axis offset
* shrinker .......... the self-shrinker-type equation on the same family:
                      the surviving coefficients force the screw axis through
                      the origin, and on the axis they pin round cylinders to
                      the single radius 1/sqrt(-alpha)
* isoparametric ..... planes, spheres and cylinders: stationary exactly for
                      planes through the origin (every alpha), origin-centered
                      spheres (alpha = -2), and spheres through the origin
                      (alpha = -4)

The coefficients are recovered numerically by collocation from pointwise
residual values, so the verdicts double as an independent check of the
hand-derived formulas.
"""

from collections import Counter

from axistat import (
    helicoidal_nonexistence_scan,
    shrinker_axis_check,
    verify_isoparametric,
)
from axistat.verifiers import DEFAULT_SCAN_ALPHAS, ISOPARAMETRIC_FAMILIES

cells = helicoidal_nonexistence_scan()
blocked = sum(1 for c in cells if c.blocked)
coefs = Counter(c.blocking_coefficient for c in cells)
print(f"helicoidal suite: {blocked}/{len(cells)} cells blocked")
print(f"  blocking coefficients: {dict(sorted(coefs.items()))}")

cells = shrinker_axis_check()
off_axis = [c for c in cells if c.params["q1"] != 0.0]
admitted = [c for c in cells if not c.blocked]
print(f"\nshrinker suite: all {len(off_axis)} off-axis cells blocked:",
      all(c.blocked for c in off_axis))
print("  admitted cells (axis through origin, radius pinned; "
      "pitch-independent, deduplicated):")
for a, x0 in sorted({(c.params["alpha"], c.params["x0"]) for c in admitted}):
    print(f"    alpha = {a:g}, radius = {x0:g}  (1/sqrt(-alpha) = {(-a) ** -0.5:g})")

print("\nisoparametric catalogue over the default exponent grid:")
for family in ISOPARAMETRIC_FAMILIES:
    hits = [a for a in DEFAULT_SCAN_ALPHAS
            if verify_isoparametric(family, a).verdict == "STATIONARY"]
    label = ", ".join(f"{a:g}" for a in hits) if hits else "never"
    print(f"  {family:22s} stationary for alpha: {label}")
