#!/usr/bin/env python3
"""
Evidence scans for the two open questions, and what they actually find
======================================================================

Two natural conjectures about first-generation bodies: (a) the sorted
spectrum of a polygon's inverted angles majorizes the regular polygon's
spectrum, and (b) the regular seed grows the largest first-generation
body.  (a) would imply (b) through Schur concavity.  The seeded scans
here find counterexamples to both: (a) fails generically at prefix index
2n, already for arbitrarily small perturbations of the regular polygon,
and (b) fails for n >= 6, e.g. at an alternating hexagon.  For n <= 5 the
area dominance survives every scan we have run.
"""

import numpy as np

from hypergon import (
    IdealPolygon,
    decreasing_rearrangement,
    euclidean_area,
    grow_body,
    inverted_angle_matrix,
    majorization_scan,
    majorizes,
    property_suite,
)

print("majorization scan, 4-gons, 2000 seeded samples:")
report = majorization_scan(4, 2000, seed=42)
print(f"  violations: {len(report.violations)}/2000  (min prefix margin {report.detail['min_prefix_margin']:.3e})")
first = report.violations[0]
print(f"  first witness: angles {np.round(first.input['angles'], 6)}")
print(f"    prefix {first.observed['prefix_index']}: sample {first.observed['sample_prefix']:.9f} "
      f"< regular {first.observed['regular_prefix']:.9f}")

print("\nthe failure is generic near the regular polygon, always at prefix 2n:")
rng = np.random.default_rng(0)
for n in (4, 5, 6):
    reg_spec = decreasing_rearrangement(inverted_angle_matrix(IdealPolygon.regular(n)).values())
    fails = 0
    for _ in range(200):
        d = rng.normal(0, 1e-3, n)
        d -= d.mean()
        spec = decreasing_rearrangement(
            inverted_angle_matrix(IdealPolygon(tuple(1.0 / n + d))).values()
        )
        if not majorizes(spec, reg_spec):
            fails += 1
    print(f"  n={n}: {fails}/200 random 1e-3 perturbations fail to majorize the regular spectrum")
print("  (the top 2n entries are the corner images; the regular polygon maximizes their total)")

print("\narea dominance of the regular seed at one generation:")
rep = property_suite("conj51", samples=2000, seed=8001)
print(f"  mixed-n scan (n = 3..8), 2000 samples: {len(rep.violations)} violations")

alt = np.array([0.206755, 0.126578] * 3)
hexagon = IdealPolygon(tuple(alt / alt.sum()))
sample_area = euclidean_area(grow_body(hexagon, 1).boundary_angles)
regular_area = euclidean_area(grow_body(IdealPolygon.regular(6), 1).boundary_angles)
print("\nexplicit counterexample at n=6 (alternating hexagon):")
print(f"  seed angles {np.round(hexagon.angles, 6)}")
print(f"  body area {sample_area:.9f} vs regular-seed body area {regular_area:.9f} "
      f"(excess {sample_area - regular_area:+.3e})")
print("for n = 3, 4, 5 no violation has appeared in any seeded scan")
