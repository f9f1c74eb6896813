#!/usr/bin/env python3
"""
Growing the reflection tessellation
===================================

Reflecting an ideal polygon across each of its sides produces the first
generation of cells; each cell then reflects across its free sides, and
so on.  The union of all generations is itself a convex ideal polygon.
This script grows a few bodies, checks the counting laws, shows the one
exceptional regular case (the triangle's first generation), and writes an
SVG figure of the tessellation.
"""

import numpy as np

from hypergon import IdealPolygon, grow_body, is_regular
from hypergon.cli import RenderSpec, render_svg

# the regular triangle: its first generation closes into a regular hexagon
tri = IdealPolygon.regular(3)
body = grow_body(tri, 1)
print("regular triangle, one generation:")
print(f"  cells per generation: {body.polygon_counts}")
print(f"  boundary angles: {np.round(body.boundary_angles, 12)}")
print(f"  regular at tol 1e-9: {is_regular(body.boundary_angles)}")

print("\nthe same seed two generations deep is no longer regular:")
body2 = grow_body(tri, 2)
print(f"  boundary angles (sorted): {np.round(np.sort(body2.boundary_angles), 6)}")
print(f"  regular: {is_regular(body2.boundary_angles)}")

print("\nregular seeds with more sides break regularity already at s=1:")
for n in range(4, 9):
    b = grow_body(IdealPolygon.regular(n), 1)
    spread = b.boundary_angles.max() - b.boundary_angles.min()
    print(f"  n={n}: {len(b.boundary_angles)} boundary sides, angle spread {spread:.6f}")

# counting laws: n*(n-1)^s boundary sides, angles sum to a full turn
print("\ncounting laws for a random 4-gon seed:")
seed = IdealPolygon((0.21, 0.31, 0.17, 0.31))
for s in range(0, 4):
    b = grow_body(seed, s)
    print(f"  s={s}: sides {len(b.boundary_angles):4d} (expect {4 * 3**s:4d}), "
          f"angle sum {b.boundary_angles.sum():.12f}, max angle {b.boundary_angles.max():.6f}")

path = "d3_body_s3.svg"
svg = render_svg(grow_body(tri, 3), RenderSpec(canvas=900))
with open(path, "w") as fh:
    fh.write(svg)
print(f"\nwrote {path}: generations colored separately, every side a circular arc")
