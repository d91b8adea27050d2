import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from arithdeg.poly import (
    MAX_EXPONENT,
    NotDivisible,
    ParseError,
    Polynomial,
    PolynomialError,
    VariableMismatch,
    bareiss_determinant,
    content_primitive,
    dehomogenize,
    divexact,
    divides,
    gcd_list,
    homogenize,
    parse_polynomial,
    poly_arith,
    poly_gcd,
    primitive,
    resultant_univar,
    squarefree_part,
    substitute,
    sylvester_resultant,
)

XY = ("x", "y")
XYZ = ("x", "y", "z")


def P(text, variables=XY):
    return parse_polynomial(text, variables)


def polys(variables=XY, max_deg=3, max_terms=5, coeff=20):
    n = len(variables)
    term = st.tuples(st.tuples(*[st.integers(0, max_deg)] * n), st.integers(-coeff, coeff))
    return st.lists(term, max_size=max_terms).map(lambda ts: _build(ts, variables))


def _build(ts, variables):
    acc = {}
    for e, c in ts:
        acc[e] = acc.get(e, 0) + c
    return Polynomial(acc, variables)


def to_sympy(p):
    syms = sympy.symbols(p.variables)
    return sum(c * sympy.prod([s**k for s, k in zip(syms, e)]) for e, c in p.term_dict().items())


# ---- poly_arith examples


def test_arith_examples():
    x, y = P("x"), P("y")
    assert poly_arith(x + 1, x - 1, "mul") == P("x^2 - 1")
    assert poly_arith(2 * x * y, -2 * x * y, "add").is_zero()
    assert poly_arith(x, y, "sub") == P("x - y")


def test_arith_mismatch():
    with pytest.raises(VariableMismatch):
        poly_arith(P("x"), parse_polynomial("x", ("x", "z")), "add")


def test_exponent_overflow():
    big = Polynomial.monomial((MAX_EXPONENT, 0), 1, XY)
    with pytest.raises(PolynomialError):
        big * P("x")


def test_canonical_order_and_print():
    p = P("1 - 3*y + 2*x^2*y")
    assert str(p) == "2*x^2*y - 3*y + 1"
    assert p.leading_term() == ((2, 1), 2)
    assert p.degree() == 3 and P("0").degree() == -1


# ---- parsing


def test_parse_examples():
    assert str(P("(x+y)^2")) == "x^2 + 2*x*y + y^2"
    assert P("-x + -(-y)") == P("y - x")
    assert P("3") == 3


@pytest.mark.parametrize("bad", ["2x", "x y", "x^", "x^-1", "(x", "q", "x ** 2", ""])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        P(bad)


def test_parse_error_position():
    with pytest.raises(ParseError) as exc:
        P("x + * y")
    assert exc.value.position == 4


@settings(max_examples=150, deadline=None)
@given(polys(XYZ))
def test_parse_roundtrip(p):
    assert parse_polynomial(str(p), XYZ) == p


# ---- ring laws


@settings(max_examples=150, deadline=None)
@given(polys(), polys(), polys())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Polynomial.zero(XY)
    assert a * 1 == a


@settings(max_examples=100, deadline=None)
@given(polys(), polys())
def test_mul_matches_sympy(a, b):
    assert sympy.expand(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0


# ---- content, division, gcd


def test_content_primitive():
    c, prim, sign = content_primitive(P("-6*x + 4*y"))
    assert (c, sign) == (2, -1)
    assert prim == P("3*x - 2*y")
    with pytest.raises(PolynomialError):
        content_primitive(P("0"))


def test_divexact():
    assert divexact(P("x^2 - y^2"), P("x - y")) == P("x + y")
    with pytest.raises(NotDivisible):
        divexact(P("x^2 + 1"), P("x - 1"))
    assert divides(P("x"), P("x*y")) and not divides(P("y^2"), P("x*y"))


def test_gcd_examples():
    assert poly_gcd(P("x^2 - y^2"), P("x^2 - 2*x*y + y^2")) == P("x - y")
    assert poly_gcd(P("6*x"), P("4*x^2")) == P("x")
    assert poly_gcd(P("x + 1"), P("y + 1")) == 1
    assert gcd_list([P("x*y"), P("x^2"), P("x*y^2")]) == P("x")


@settings(max_examples=100, deadline=None)
@given(polys(max_deg=2, max_terms=4), polys(max_deg=2, max_terms=4), polys(max_deg=2, max_terms=3))
def test_gcd_laws(a, b, c):
    if a.is_zero() or b.is_zero() or c.is_zero():
        return
    g = poly_gcd(a, b)
    assert divides(g, a) and divides(g, b)
    # gcd(ac, bc) = prim(c) * gcd(a, b) up to the canonical sign
    assert poly_gcd(a * c, b * c) == primitive(primitive(c) * g)


@settings(max_examples=100, deadline=None)
@given(polys(max_deg=2, max_terms=4), polys(max_deg=2, max_terms=4))
def test_gcd_matches_sympy(a, b):
    if a.is_zero() or b.is_zero():
        return
    ours = to_sympy(poly_gcd(a, b))
    ref = sympy.gcd(to_sympy(a), to_sympy(b))
    ratio = sympy.simplify(ours / ref)
    assert ratio.is_number


def test_squarefree_part():
    p = P("(x - y)^3 * (x + 2*y)")
    assert squarefree_part(p) == primitive(P("(x - y) * (x + 2*y)"))


# ---- substitution and homogenization


@settings(max_examples=100, deadline=None)
@given(polys(), polys(), polys(max_deg=2, max_terms=3), polys(max_deg=2, max_terms=3))
def test_substitute_homomorphism(a, b, u, v):
    sub = {"x": u, "y": v}
    assert substitute(a * b, sub) == substitute(a, sub) * substitute(b, sub)
    assert substitute(a + b, sub) == substitute(a, sub) + substitute(b, sub)


def test_homogenize_roundtrip():
    p = P("x^2 + 3*y + 1")
    h = homogenize(p, "z", 2)
    assert h == parse_polynomial("x^2 + 3*y*z + z^2", XYZ)
    assert dehomogenize(h, "z") == p


# ---- resultants


def test_resultant_examples():
    # common root x = 1
    assert resultant_univar(P("x^2 - 1"), P("x - 1"), "x") == 0
    assert resultant_univar(P("x - y"), P("x + y"), "x") == P("2*y")
    assert resultant_univar(P("x^2 + y"), P("x - 1"), "x") == P("y + 1")


def test_resultant_formal_degrees():
    # formal degree 2 with vanishing leading coefficient
    a, b = P("x - y"), P("x + 1")
    assert resultant_univar(a, b, "x", degrees=(2, 1)) == sylvester_resultant(a, b, "x", degrees=(2, 1))


@settings(max_examples=120, deadline=None)
@given(polys(max_deg=3, max_terms=4), polys(max_deg=3, max_terms=4))
def test_resultant_matches_sylvester(a, b):
    if a.degree_in("x") < 1 or b.degree_in("x") < 1:
        return
    assert resultant_univar(a, b, "x") == sylvester_resultant(a, b, "x")


@settings(max_examples=100, deadline=None)
@given(polys(max_deg=2, max_terms=3), polys(max_deg=2, max_terms=3), polys(max_deg=2, max_terms=3))
def test_resultant_multiplicative(a, b, c):
    if min(a.degree_in("x"), b.degree_in("x"), c.degree_in("x")) < 1:
        return
    lhs = resultant_univar(a * b, c, "x")
    assert lhs == resultant_univar(a, c, "x") * resultant_univar(b, c, "x")


def test_bareiss():
    assert bareiss_determinant([[2, 0], [0, 3]]) == 6
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[1, 2], [2, 4]]) == 0
