import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arithdeg.poly import Polynomial
from arithdeg.projective import (
    Indeterminate,
    PointError,
    ProjectivePoint,
    apply_map,
    normalize_point,
    parse_point,
    point_orbit_heights,
    weil_height,
)
from arithdeg.ratmap import (
    MapError,
    NotDominantWarning,
    TermLimitExceeded,
    check_dominant,
    compose,
    degree_sequence,
    identity_map,
    iterate,
    make_map,
    parse_map_file,
    topological_degree_dim2,
    verify_inverse,
)

# ---- points


def test_normalize_examples():
    assert normalize_point((4, 6, 2)).coords == (2, 3, 1)
    assert normalize_point((0, -3, 6)).coords == (0, 1, -2)
    with pytest.raises(PointError):
        normalize_point((0, 0, 0))
    with pytest.raises(PointError):
        ProjectivePoint((2, 4, 6))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-50, 50), min_size=2, max_size=4).filter(any), st.integers(1, 9), st.sampled_from([1, -1]))
def test_normalize_scale_invariant(raw, k, s):
    assert normalize_point(raw) == normalize_point([s * k * x for x in raw])


def test_parse_point_and_height():
    P = parse_point("[2:3:1]")
    assert str(P) == "[2:3:1]"
    assert weil_height(P) == math.log(3)
    assert weil_height(parse_point("[1:1:1]")) == 0.0
    with pytest.raises(PointError):
        parse_point("[1:x]")


def test_apply_map_examples(fib_map, squaring):
    assert apply_map(squaring, parse_point("[2:3:1]")) == parse_point("[4:9:1]")
    assert apply_map(fib_map, parse_point("[1:1:1]")) == parse_point("[2:1:1]")
    assert isinstance(apply_map(fib_map, parse_point("[1:0:0]")), Indeterminate)


def test_point_orbit(squaring, fib_map):
    orbit = point_orbit_heights(squaring, parse_point("[2:3:1]"), 6)
    assert [r.n for r in orbit] == list(range(7))
    for r in orbit:
        assert math.isclose(r.height, 2**r.n * math.log(3))
    fixed = point_orbit_heights(squaring, parse_point("[1:1:1]"), 5)
    assert fixed.is_preperiodic() and set(fixed.heights()) == {0.0}
    stopped = point_orbit_heights(fib_map, parse_point("[0:1:0]"), 5)
    assert stopped.truncated and "indeterminacy" in stopped.stop_reason


# ---- maps


def test_make_map_reduces_common_factor():
    f = make_map(["X*Z", "Y*Z", "Z^2"])
    assert f == identity_map(2)
    g = make_map(["2*X", "4*Y", "6*Z"])
    assert str(g) == "[X : 2*Y : 3*Z]"


def test_make_map_errors():
    with pytest.raises(MapError):
        make_map(["X^2", "Y", "Z"])
    with pytest.raises(MapError):
        make_map(["X", "X", "X"])
    with pytest.warns(NotDominantWarning):
        make_map(["X", "X", "Z"], on_nondominant="warn")


def test_parse_map_file_roundtrip(fib_map):
    assert parse_map_file(fib_map.to_text()) == fib_map
    with pytest.raises(MapError):
        parse_map_file("P2 X,Y,Z\nX\nY\nZ")


def test_iterate_example1(fib_map):
    f3 = iterate(fib_map, 3)
    assert str(f3) == "[4*X*Y^2*Z^2 : 4*X^2*Y^3 : Z^5]"


def test_degree_sequences(fib_map, squaring):
    assert degree_sequence(fib_map, 10).degrees == [2, 3, 5, 8, 13, 21, 34, 55, 89, 144]
    assert degree_sequence(squaring, 6).degrees == [2, 4, 8, 16, 32, 64]
    assert degree_sequence(identity_map(2), 5).degrees == [1] * 5


def test_term_limit(squaring):
    f = make_map(["(X+Y+Z)^2", "Y^2", "Z^2"])
    with pytest.raises(TermLimitExceeded) as exc:
        degree_sequence(f, 8, max_terms=50)
    assert exc.value.partial.degrees[:2] == [2, 4]


def test_verify_inverse(fib_map, fib_inverse, squaring):
    assert verify_inverse(fib_map, fib_inverse)
    assert not verify_inverse(squaring, squaring)
    cremona = make_map(["Y*Z", "X*Z", "X*Y"])
    assert verify_inverse(cremona, cremona)


def test_topological_degree(fib_map, squaring):
    assert topological_degree_dim2(squaring, seed=1) == 4
    assert topological_degree_dim2(fib_map, seed=1) == 1
    assert topological_degree_dim2(make_map(["Y*Z", "X*Z", "X*Y"]), seed=3) == 1
    assert topological_degree_dim2(make_map(["X^3", "Y^3", "Z^3"]), seed=5) == 9


def test_check_dominant():
    assert check_dominant(make_map(["X^2", "Y^2", "Z^2"]))
    assert not check_dominant(make_map(["X", "X", "Z"], on_nondominant="ignore"))


def _random_map(rng, deg):
    ctx = ("X", "Y", "Z")
    comps = []
    for _ in range(3):
        terms = {}
        for _ in range(rng.randint(1, 3)):
            e = [0, 0, 0]
            for _ in range(deg):
                e[rng.randrange(3)] += 1
            terms[tuple(e)] = rng.randint(-3, 3) or 1
        comps.append(Polynomial(terms, ctx))
    return comps


def test_submultiplicativity_random():
    rng = random.Random(11)
    checked = 0
    while checked < 100:
        comps = _random_map(rng, rng.randint(1, 2))
        try:
            f = make_map([str(c) for c in comps], on_nondominant="ignore")
            degs = [1] + degree_sequence(f, 4).degrees
        except MapError:
            continue
        for m in range(1, 3):
            for n in range(1, 3):
                assert degs[m + n] <= degs[m] * degs[n]
        checked += 1


def test_compose_associative(fib_map, fib_inverse, squaring):
    assert compose(compose(fib_map, squaring), fib_inverse) == compose(fib_map, compose(squaring, fib_inverse))
