"""Sturm sequences and certified dominant roots of integer polynomials.

Univariate polynomials here are plain coefficient lists, lowest degree first.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np


@dataclass(frozen=True)
class AlgebraicRadius:
    """Spectral radius / dominant root modulus of an integer polynomial.

    ``interval`` is a rational isolating interval ``(lo, hi)`` for the
    dominant modulus when ``certified`` is true (``lo == hi`` for rational
    roots); otherwise it is None and ``value`` is only a float estimate.
    """

    charpoly: tuple
    value: float
    certified: bool
    interval: tuple | None = None
    note: str = ""

    @property
    def width(self) -> float:
        if self.interval is None:
            return math.inf
        return float(self.interval[1] - self.interval[0])

    def charpoly_str(self, var: str = "x") -> str:
        return poly_to_str(self.charpoly, var)

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "certified": self.certified,
            "interval": None if self.interval is None else [str(self.interval[0]), str(self.interval[1])],
            "charpoly": self.charpoly_str(),
            "charpoly_coefficients": list(self.charpoly),
            "note": self.note,
        }


def poly_to_str(coeffs: Sequence[int], var: str = "x") -> str:
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mon = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        a = abs(c)
        body = (str(a) if a != 1 or not mon else "") + ("*" if a != 1 and mon else "") + mon
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return head + "".join(f" {s} {b}" for s, b in parts[1:])


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _divmod(a: list, b: list) -> tuple:
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and a:
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = f
        for i, bc in enumerate(b):
            a[i + shift] -= f * bc
        a.pop()
        _trim(a)
    return _trim(q), a


def _gcd(a: list, b: list) -> list:
    a, b = _trim([Fraction(x) for x in a]), _trim([Fraction(x) for x in b])
    while b:
        a, b = b, _divmod(a, b)[1]
    return [x / a[-1] for x in a]


def derivative(p: Sequence) -> list:
    return [k * p[k] for k in range(1, len(p))]


def squarefree(p: Sequence) -> list:
    """Square-free part over Q, scaled back to primitive integer coefficients."""
    p = _trim(list(p))
    if len(p) <= 1:
        return p
    g = _gcd(p, derivative(p))
    q, r = _divmod(p, g)
    return to_integer(q)


def to_integer(p: Sequence) -> list:
    p = [Fraction(x) for x in p]
    den = 1
    for x in p:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in p]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    if ints and ints[-1] < 0:
        ints = [-x for x in ints]
    return ints


def evaluate(p: Sequence, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sturm_sequence(p: Sequence) -> list:
    seq = [[Fraction(c) for c in _trim(list(p))]]
    seq.append([Fraction(c) for c in derivative(seq[0])])
    while len(seq[-1]) > 1:
        r = _divmod(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append([-c for c in r])
    return seq


def _sign_changes(seq: list, x: Fraction) -> int:
    signs = []
    for s in seq:
        v = evaluate(s, x)
        if v:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(seq: list, a: Fraction, b: Fraction) -> int:
    """Distinct real roots in ``(a, b]`` of the square-free polynomial ``seq[0]``."""
    return _sign_changes(seq, a) - _sign_changes(seq, b)


def cauchy_bound(p: Sequence) -> Fraction:
    p = _trim(list(p))
    lead = abs(Fraction(p[-1]))
    return 1 + max((abs(Fraction(c)) / lead for c in p[:-1]), default=Fraction(0))


def _rational_root_near(p: list, x: Fraction) -> Fraction | None:
    cand = x.limit_denominator(abs(p[-1]))
    return cand if evaluate(p, cand) == 0 else None


def isolate_largest_positive_root(p: Sequence, tol: Fraction) -> tuple | None:
    """Rational interval ``(lo, hi]`` of width <= tol holding exactly the largest positive root.

    Returns None when ``p`` has no positive root.  An exact rational root is
    returned as a degenerate interval ``(r, r)``.
    """
    sf = squarefree(p)
    if len(sf) <= 1:
        return None
    seq = sturm_sequence(sf)
    lo, hi = Fraction(0), cauchy_bound(sf)
    if count_roots(seq, lo, hi) == 0:
        return None
    while hi - lo > tol or count_roots(seq, lo, hi) > 1:
        mid = (lo + hi) / 2
        if count_roots(seq, mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
        exact = _rational_root_near(sf, (lo + hi) / 2)
        if exact is not None and lo < exact <= hi and count_roots(seq, exact, hi) == 0:
            return exact, exact
    exact = _rational_root_near(sf, hi)
    if exact is not None and lo < exact <= hi:
        return exact, exact
    return lo, hi


def reflect(p: Sequence) -> list:
    """Coefficients of ``p(-x)``."""
    return [c if k % 2 == 0 else -c for k, c in enumerate(p)]


def certify_dominant_root(p: Sequence, tol: float) -> AlgebraicRadius:
    """Largest root modulus of an integer polynomial, certified when real.

    Numerical roots decide which root is dominant.  If that modulus is
    attained by a real root, Sturm bisection isolates it to width ``tol``;
    otherwise the float modulus is returned flagged as uncertified.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    p = [int(c) for c in _trim(list(p))]
    if len(p) < 2:
        raise ValueError("polynomial must have positive degree")
    # strip the factor x^k: zero roots never dominate unless all roots are zero
    k = next(i for i, c in enumerate(p) if c)
    core = p[k:]
    if len(core) == 1:
        return AlgebraicRadius(tuple(p), 0.0, True, (Fraction(0), Fraction(0)), "all roots zero")
    roots = np.roots([float(c) for c in reversed(squarefree(core))])
    mods = np.abs(roots)
    rho = float(mods.max())
    real_dominant = any(
        abs(r.imag) <= 1e-7 * max(1.0, rho) and abs(abs(r.real) - rho) <= 1e-7 * max(1.0, rho) for r in roots
    )
    ftol = Fraction(tol)
    if real_dominant:
        pos = isolate_largest_positive_root(core, ftol)
        neg = isolate_largest_positive_root(reflect(core), ftol)
        cands = [iv for iv in (pos, neg) if iv is not None]
        if cands:
            best = max(cands, key=lambda iv: iv[1])
            # the two sides may overlap only if |r+| and |r-| are equal within tol
            value = float((best[0] + best[1]) / 2)
            if abs(value - rho) <= max(1e-6 * rho, 2 * tol):
                return AlgebraicRadius(tuple(p), value, True, best)
    return AlgebraicRadius(
        tuple(p), rho, False, None, "dominant modulus attained by a non-real root; float estimate only"
    )
