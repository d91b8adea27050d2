"""Arithmetic degree of a point: growth of Weil heights along its orbit.

For a point with dense orbit the growth rate should match lambda_1.
"""

import math

from arithdeg.analysis import estimate_growth, lift
from arithdeg.projective import parse_point, point_orbit_heights
from arithdeg.ratmap import make_map

f = make_map(["2*Y*Z", "X*Y", "Z^2"])
orbit = point_orbit_heights(f, parse_point("[1:1:1]"), 14)
for row in orbit:
    print(f"n={row.n:2d}  h={row.height:10.4f}  {row.point}")

hs = lift(orbit.heights())
for method in ("ratio", "regression", "root"):
    est = estimate_growth(hs, method, start=0)
    print(f"{method:10s} {est.value:.6f}  window {est.window}")
print(f"golden ratio {(1 + math.sqrt(5)) / 2:.6f}")

square = make_map(["X^2", "Y^2", "Z^2"])
fixed = point_orbit_heights(square, parse_point("[1:1:1]"), 5)
print("[1:1:1] under squaring is preperiodic:", fixed.is_preperiodic())
