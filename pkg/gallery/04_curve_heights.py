"""Heights of curves pushed forward along an orbit.

Two routes give the image curve: implicitizing a parametrization by a
resultant, or pulling back by the inverse map and discarding the
exceptional factors.  For the line X + Y = Z they agree.  Under a map
that ramifies along a curve, the pushforward carries a multiplicity.
"""

from arithdeg.cycles import Hypersurface, ParamCurve, curve_orbit_heights, parametrize_line
from arithdeg.ratmap import make_map

f = make_map(["2*Y*Z", "X*Y", "Z^2"])
g = make_map(["4*Y*Z", "X^2", "2*X*Z"])
V = Hypersurface.parse("X + Y - Z", f.variables)
by_param = curve_orbit_heights(f, parametrize_line(V), 6)
by_inverse = curve_orbit_heights(f, V, 6, "inverse-pullback", g)
for a, b in zip(by_param, by_inverse):
    print(f"n={a.n}  deg={a.degree:3d}  h={a.height:8.4f}  agree={a.cycle == b.cycle}")

square = make_map(["X^2", "Y^2", "Z^2"])
for row in curve_orbit_heights(square, ParamCurve.parse(["t", "u - t", "u"]), 5):
    print(f"squaring n={row.n}  deg={row.degree:3d}  h={row.height:9.4f}")

ramified = make_map(["X^2", "Y*Z", "Z^2"])
for row in curve_orbit_heights(ramified, ParamCurve.parse(["t", "0", "u"]), 5):
    print(f"Y = 0 under [X^2 : YZ : Z^2], n={row.n}: multiplicity {row.multiplicity}")
