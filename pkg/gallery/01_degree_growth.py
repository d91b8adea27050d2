"""Degree growth of a birational map of the plane.

The map (x, y) -> (2y, xy) has Fibonacci degrees.  The exact degree
sequence determines a linear recurrence whose dominant root is the first
dynamical degree, certified by Sturm isolation.
"""

from arithdeg.analysis import detect_recurrence, dominant_root
from arithdeg.ratmap import degree_sequence, iterate, make_map, topological_degree_dim2

f = make_map(["2*Y*Z", "X*Y", "Z^2"])
print("f      =", f)
print("f^3    =", iterate(f, 3))

degs = degree_sequence(f, 12).degrees
print("deg f^n, n = 1..12:", degs)

model = detect_recurrence(degs, 3)
print("recurrence coefficients:", [str(c) for c in model.coefficients])
root = dominant_root(model, 1e-12)
lo, hi = root.interval
print(f"lambda_1 in [{float(lo):.12f}, {float(hi):.12f}]  ({root.charpoly_str()})")

# lambda_2 is the topological degree; a birational map has topological degree 1
print("topological degree:", topological_degree_dim2(f, seed=1))
