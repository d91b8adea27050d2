import json
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arithdeg.analysis import (
    MIN_TERMS,
    PreconditionError,
    Quantity,
    check_birational_duality,
    check_cycle_consistency,
    check_ks_point,
    check_log_concavity,
    check_polarized,
    check_product_formula,
    compare,
    detect_recurrence,
    dominant_root,
    estimate_growth,
    estimate_height_growth,
)
from arithdeg.projective import parse_point

PHI = (1 + math.sqrt(5)) / 2


def fib(n, a=2, b=3):
    out = [a, b]
    while len(out) < n:
        out.append(out[-1] + out[-2])
    return out[:n]


# ---- estimate_growth


def test_estimate_examples():
    for method in ("root", "ratio", "regression"):
        assert math.isclose(estimate_growth([2, 4, 8, 16, 32], method).value, 2.0, rel_tol=1e-12)
        assert math.isclose(estimate_growth([5, 5, 5, 5], method).value, 1.0, rel_tol=1e-12)
    reg = estimate_growth(fib(12), "regression")
    assert abs(reg.value - PHI) < 0.02
    rec = estimate_growth(fib(12), "recurrence-exact")
    assert rec.certified and abs(rec.value - PHI) < 1e-9


def test_estimate_errors():
    with pytest.raises(ValueError):
        estimate_growth([1, 2], "ratio")
    with pytest.raises(ValueError):
        estimate_growth([1, 0, 2], "ratio")
    with pytest.raises(ValueError):
        estimate_growth([1, 2, 4], "magic")
    with pytest.raises(ValueError):
        estimate_growth([1.5, 2.5, 4.0, 6.0], "recurrence-exact")


def test_recurrence_fallback():
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
    est = estimate_growth(primes, "recurrence-exact")
    assert est.method == "ratio" and not est.certified and "no exact recurrence" in est.note


@settings(max_examples=100, deadline=None)
@given(st.floats(0.5, 50), st.floats(1.01, 5), st.sampled_from(["root", "ratio", "regression"]))
def test_geometric_exact(c, r, method):
    seq = [c * r**n for n in range(1, 12)]
    if min(seq) < 1:
        return  # lifting changes the sequence
    assert abs(estimate_growth(seq, method).value - r) <= 1e-9 * r


def test_height_growth_mixed_rates():
    # deg = 2^n, log c = 4^n: the larger rate wins
    degs = [2**n for n in range(1, 10)]
    logs = [float(4**n) for n in range(1, 10)]
    assert abs(estimate_height_growth(degs, logs).value - 4) < 1e-9
    est = estimate_height_growth(degs, [0.0] * 9)
    assert est.certified and est.value == 2.0


# ---- recurrences


def test_detect_recurrence_examples():
    m = detect_recurrence(fib(10), 3)
    assert m.order == 2 and m.coefficients == (1, 1) and m.charpoly == (-1, -1, 1)
    assert abs(dominant_root(m).value - PHI) < 1e-9
    assert detect_recurrence([2, 4, 8, 16, 32, 64], 2).order == 1
    assert detect_recurrence([2, 3, 5, 7, 11, 13, 17, 19, 23, 29], 3) is None
    with pytest.raises(ValueError):
        detect_recurrence([1, 2, 3], 2)
    with pytest.raises(ValueError):
        dominant_root(m, 0)


def test_detect_recurrence_rejects_corrupted_tail():
    rng = random.Random(5)
    for _ in range(50):
        seq = fib(14)
        i = rng.randrange(6, 14)
        seq[i] += rng.choice([-1, 1]) * rng.randint(1, 5)
        m = detect_recurrence(seq, 3)
        # no model may claim to reproduce the corrupted term
        if m is not None:
            c = m.coefficients
            for n in range(len(seq) - m.order):
                assert seq[n + m.order] == sum(ci * seq[n + j] for j, ci in enumerate(c))
            assert m.order > 2


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=2, max_size=3), st.lists(st.integers(1, 9), min_size=3, max_size=3))
def test_recurrence_recovers_generator(coeffs, init):
    m = len(coeffs)
    seq = list(init[:m])
    for _ in range(14):
        seq.append(sum(c * seq[-m + i] for i, c in enumerate(coeffs)))
    model = detect_recurrence(seq, 3)
    assert model is not None and model.order <= m
    for n in range(len(seq) - model.order):
        assert seq[n + model.order] == sum(c * seq[n + i] for i, c in enumerate(model.coefficients))


# ---- comparisons


def test_compare_rigorous_and_float():
    two = Quantity.exact(2)
    assert compare("s", two, Quantity.exact(2), "==", 0.05).verdict == "consistent"
    assert compare("s", Quantity.exact(1), two, ">=", 0.05).verdict == "violated"
    f = Quantity(2.05, "float-estimate", terms=10)
    assert compare("s", f, two, "==", 0.05).verdict == "consistent"
    assert compare("s", f, two, "==", 0.01).verdict == "inconclusive"
    short = Quantity(2.0, "float-estimate", terms=MIN_TERMS - 1)
    assert compare("s", short, two, "==", 0.05).verdict == "inconclusive"
    assert compare("s", Quantity(math.nan, "unavailable"), two, "==", 0.05).verdict == "inconclusive"
    with pytest.raises(ValueError):
        compare("s", two, two, "<>", 0.05)


@settings(max_examples=100, deadline=None)
@given(st.floats(0.5, 10), st.floats(0.5, 10), st.floats(0.001, 0.5), st.floats(0.001, 0.5))
def test_verdict_monotone_in_tolerance(a, b, t1, t2):
    lo, hi = sorted((t1, t2))
    qa, qb = Quantity(a, "float-estimate", terms=10), Quantity(b, "float-estimate", terms=10)
    for rel in ("==", ">=", "<="):
        if compare("s", qa, qb, rel, lo).verdict == "consistent":
            assert compare("s", qa, qb, rel, hi).verdict == "consistent"


# ---- conjecture checks


def test_product_formula_examples():
    lams = [1, PHI, 1]
    rep = check_product_formula(lams, {1: Quantity(1.62, "float-estimate", terms=12)})
    assert rep.verdict == "consistent"
    bad = check_product_formula([1, 2, 4], {1: Quantity.exact(1)})
    assert bad.verdict == "violated"
    with pytest.raises(ValueError):
        check_product_formula([1, 2, 4], {3: 8})


def test_log_concavity_examples():
    assert check_log_concavity([1, 2, 4]).verdict == "consistent"
    assert check_log_concavity([1, 1, 4]).verdict == "violated"
    assert check_log_concavity([1, PHI, PHI, 1], lambda1=PHI).verdict == "consistent"
    with pytest.raises(ValueError):
        check_log_concavity([1, 2])


def test_duality_examples(fib_map, fib_inverse, squaring):
    rep = check_birational_duality(fib_map, fib_inverse, {1: PHI, 2: PHI}, {1: PHI, 2: PHI})
    assert rep.verdict == "consistent" and len(rep.lines) == 2
    with pytest.raises(PreconditionError):
        check_birational_duality(squaring, squaring, {1: 2}, {2: 2})


def test_ks_point_examples(fib_map, squaring):
    rep = check_ks_point(squaring, parse_point("[2:3:1]"), 10, lambda1=2)
    assert rep.verdict == "consistent" and rep.gap < 1e-6
    fixed = check_ks_point(squaring, parse_point("[1:1:1]"), 10, lambda1=2)
    assert fixed.lines[0].relation == "<=" and any("preperiodic" in n for n in fixed.notes)
    short = check_ks_point(fib_map, parse_point("[0:1:0]"), 10)
    assert short.verdict == "inconclusive"
    ex1 = check_ks_point(fib_map, parse_point("[1:1:1]"), 14)
    assert ex1.verdict == "consistent" and abs(ex1.lines[0].lhs.value - PHI) / PHI < 0.02


def test_polarized_examples():
    assert check_polarized(2, [1, 2, 4], {1: 2.0, 2: Quantity(4.05, "float-estimate", terms=8)}).verdict == "consistent"
    assert check_polarized(3, [1, 2, 4], {}).verdict == "violated"
    with pytest.raises(ValueError):
        check_polarized(0, [1, 1, 1], {})


def test_cycle_consistency():
    a = Quantity(4.01, "float-estimate", "V1", terms=8)
    b = Quantity(3.98, "float-estimate", "V2", terms=8)
    rep = check_cycle_consistency([a, b], 2, lambda1=2)
    assert rep.verdict == "consistent" and len(rep.lines) == 3


def test_report_json_fields():
    rep = check_log_concavity([1, Fraction(3, 2), 2])
    d = json.loads(json.dumps(rep.to_dict()))
    assert set(d) == {"claim", "verdict", "lhs", "rhs", "gap", "tolerance", "surrogate", "window", "lines", "notes"}
    assert d["claim"] == "log-concavity" and d["lines"][0]["lhs"]["provenance"] == "declared"


def test_identity_and_cubing_examples():
    from arithdeg.monomial import dynamical_degrees, parse_monomial
    from arithdeg.ratmap import identity_map

    assert check_product_formula([1, 1, 1], {1: 1, 2: 1}).verdict == "consistent"
    ident = identity_map(2)
    assert check_birational_duality(ident, ident, {1: 1, 2: 1}, {1: 1, 2: 1}).verdict == "consistent"
    assert check_polarized(1, [1, 1, 1], {1: 1, 2: 1}).verdict == "consistent"
    lams = [r.value for r in dynamical_degrees(parse_monomial("A = [[3,0],[0,3]]"))]
    assert lams == [1.0, 3.0, 9.0]
    assert check_polarized(3, lams, {}).verdict == "consistent"
