"""Monomial maps: exact iterates and certified dynamical degrees.

A monomial map is an integer matrix plus coefficients.  Iterates are
matrix powers with bookkept coefficients, and lambda_k is the spectral
radius of the k-th exterior power, certified through its characteristic
polynomial.
"""

from arithdeg.monomial import (
    dynamical_degrees,
    exterior_power,
    iterate_exact,
    monomial_inverse,
    parse_monomial,
    to_rational_map,
)

for text in ("A = [[0,1],[1,1]]; c = (2,1)", "A = [[2,0],[0,2]]", "A = [[1,1,0],[0,1,1],[1,0,1]]"):
    f = parse_monomial(text)
    print(f)
    print("  as a rational map:", to_rational_map(f))
    for k, r in enumerate(dynamical_degrees(f, 1e-12)):
        if not r.certified:
            width = "uncertified: " + r.note
        else:
            width = "exact" if r.width == 0 else f"width {r.width:.1e}"
        print(f"  lambda_{k} = {r.value:.12g}  ({r.charpoly_str()}, {width})")

f = parse_monomial("A = [[0,1],[1,1]]; c = (2,1)")
print("f^4      =", iterate_exact(f, 4))
print("f^-1     =", monomial_inverse(f), "->", to_rational_map(monomial_inverse(f)))
print("wedge^2 A =", exterior_power(f.A, 2))
