"""Monomial maps ``x_i -> c_i * prod_j x_j^(a_ij)`` on the torus of P^d.

Coefficients are stored as a sign parity plus exponent vectors over the
primes occurring in the input, so iterates with coefficients like
``2^(F_n)`` stay cheap.
"""
from __future__ import annotations

import ast
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .poly import Polynomial, bareiss_determinant
from .ratmap import RationalMap, default_variables
from .roots import AlgebraicRadius, certify_dominant_root


class MonomialError(ValueError):
    pass


def as_matrix(M: Sequence[Sequence[int]]) -> tuple:
    rows = tuple(tuple(int(x) for x in row) for row in M)
    if not rows or any(len(r) != len(rows) for r in rows):
        raise MonomialError("matrix must be square and nonempty")
    return rows


def identity(d: int) -> tuple:
    return tuple(tuple(int(i == j) for j in range(d)) for i in range(d))


def mat_mul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> tuple:
    cols = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in A)


def mat_vec(A: Sequence[Sequence[int]], v: Sequence[int]) -> tuple:
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def mat_pow(A: Sequence[Sequence[int]], n: int) -> tuple:
    result, base = identity(len(A)), as_matrix(A)
    while n:
        if n & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        n >>= 1
    return result


def determinant(A: Sequence[Sequence[int]]) -> int:
    return bareiss_determinant([list(r) for r in A])


def adjugate(A: Sequence[Sequence[int]]) -> tuple:
    d = len(A)
    if d == 1:
        return ((1,),)
    adj = [[0] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            minor = [[A[r][c] for c in range(d) if c != j] for r in range(d) if r != i]
            adj[j][i] = (-1) ** (i + j) * bareiss_determinant(minor)
    return tuple(tuple(r) for r in adj)


def exterior_power(A: Sequence[Sequence[int]], k: int) -> tuple:
    """Matrix of ``k x k`` minors indexed by sorted subsets in lexicographic order.

    >>> exterior_power([[0, 1], [1, 1]], 2)
    ((-1,),)
    """
    A = as_matrix(A)
    d = len(A)
    if not 0 <= k <= d:
        raise MonomialError(f"exterior power k={k} out of range 0..{d}")
    if k == 0:
        return ((1,),)
    subsets = list(combinations(range(d), k))
    return tuple(
        tuple(bareiss_determinant([[A[r][c] for c in J] for r in I]) for J in subsets) for I in subsets
    )


def charpoly(M: Sequence[Sequence[int]]) -> tuple:
    """Characteristic polynomial ``det(x I - M)`` by Berkowitz, lowest degree first."""
    M = as_matrix(M)
    n = len(M)
    # Berkowitz: fold Toeplitz columns, division free
    vect = [1, -M[0][0]]
    for r in range(1, n):
        R = [M[r][j] for j in range(r)]  # row below the leading block
        C = [M[i][r] for i in range(r)]  # column to the right
        A = [row[:r] for row in M[:r]]
        a = M[r][r]
        col = [1, -a]
        power = C
        for _ in range(r):
            col.append(-sum(x * y for x, y in zip(R, power)))
            power = mat_vec(A, power)
        new = [0] * (r + 2)
        for i in range(r + 2):
            new[i] = sum(col[i - j] * vect[j] for j in range(len(vect)) if 0 <= i - j < len(col))
        vect = new
    return tuple(reversed(vect))


def spectral_radius(M: Sequence[Sequence[int]], tol: float = 1e-10) -> AlgebraicRadius:
    """Spectral radius of an integer matrix, certified through its characteristic polynomial."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    return certify_dominant_root(charpoly(M), tol)


def _factor(n: int) -> dict:
    """Trial-division factorization of a positive integer."""
    out: dict = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class MonomialMap:
    """Monomial map with exact coefficient bookkeeping.

    Attributes:
        A: exponent matrix, row ``i`` gives the exponents of ``f_i``.
        primes: primes occurring in the coefficients.
        exponents: ``exponents[i][p]`` is the exponent of ``primes[p]`` in ``c_i``.
        signs: ``1`` where ``c_i`` is negative, else ``0``.
    """

    A: tuple
    primes: tuple = ()
    exponents: tuple = ()
    signs: tuple = ()

    def __post_init__(self):
        A = as_matrix(self.A)
        d = len(A)
        object.__setattr__(self, "A", A)
        if not self.exponents:
            object.__setattr__(self, "exponents", tuple(() for _ in range(d)))
        if not self.signs:
            object.__setattr__(self, "signs", (0,) * d)
        if len(self.exponents) != d or len(self.signs) != d:
            raise MonomialError("need one coefficient per coordinate")
        if any(len(e) != len(self.primes) for e in self.exponents):
            raise MonomialError("exponent vectors must match the prime list")
        if determinant(A) == 0:
            raise MonomialError("det(A) = 0: the monomial map is not dominant")
        # canonical form: drop primes that no longer occur
        keep = [j for j in range(len(self.primes)) if any(e[j] for e in self.exponents)]
        if len(keep) != len(self.primes):
            object.__setattr__(self, "primes", tuple(self.primes[j] for j in keep))
            object.__setattr__(self, "exponents", tuple(tuple(e[j] for j in keep) for e in self.exponents))
        object.__setattr__(self, "exponents", tuple(tuple(int(x) for x in e) for e in self.exponents))
        object.__setattr__(self, "signs", tuple(int(s) % 2 for s in self.signs))

    @classmethod
    def from_coefficients(cls, A: Sequence[Sequence[int]], coeffs: Sequence | None = None) -> "MonomialMap":
        A = as_matrix(A)
        coeffs = [Fraction(c) for c in (coeffs if coeffs is not None else [1] * len(A))]
        if len(coeffs) != len(A):
            raise MonomialError(f"{len(A)} coordinates but {len(coeffs)} coefficients")
        if any(c == 0 for c in coeffs):
            raise MonomialError("coefficients must be nonzero")
        facts = []
        for c in coeffs:
            num, den = _factor(abs(c.numerator)), _factor(c.denominator)
            for p, e in den.items():
                num[p] = num.get(p, 0) - e
            facts.append(num)
        primes = tuple(sorted({p for f in facts for p in f}))
        exps = tuple(tuple(f.get(p, 0) for p in primes) for f in facts)
        signs = tuple(int(c < 0) for c in coeffs)
        return cls(A, primes, exps, signs)

    @property
    def dim(self) -> int:
        return len(self.A)

    @property
    def coeffs(self) -> tuple:
        """Materialized rational coefficients (may be huge for deep iterates)."""
        out = []
        for e, s in zip(self.exponents, self.signs):
            c = Fraction(1)
            for p, k in zip(self.primes, e):
                c *= Fraction(p) ** k
            out.append(-c if s else c)
        return tuple(out)

    def log_coefficients(self) -> tuple:
        """``log |c_i|`` computed from the exponent vectors."""
        return tuple(sum(k * math.log(p) for p, k in zip(self.primes, e)) for e in self.exponents)

    def prime_exponents(self, p: int) -> tuple:
        if p not in self.primes:
            return (0,) * self.dim
        j = self.primes.index(p)
        return tuple(e[j] for e in self.exponents)

    def _over(self, primes: tuple) -> tuple:
        return tuple(tuple(self.prime_exponents(p)[i] for p in primes) for i in range(self.dim))

    def __str__(self) -> str:
        coeffs = ",".join(str(c) for c in self.coeffs)
        rows = ",".join("[" + ",".join(str(x) for x in r) + "]" for r in self.A)
        return f"A = [{rows}]; c = ({coeffs})"


def compose_monomial(f: MonomialMap, g: MonomialMap) -> MonomialMap:
    """``f o g``: matrix ``A_f A_g``, coefficient exponents ``E_f + A_f E_g``."""
    if f.dim != g.dim:
        raise MonomialError("maps of different dimension")
    primes = tuple(sorted(set(f.primes) | set(g.primes)))
    Ef, Eg = f._over(primes), g._over(primes)
    cols = list(zip(*Eg)) if primes else []
    AEg = list(zip(*[mat_vec(f.A, col) for col in cols])) if primes else [()] * f.dim
    E = tuple(tuple(a + b for a, b in zip(Ef[i], AEg[i])) for i in range(f.dim))
    signs = tuple((s + v) % 2 for s, v in zip(f.signs, mat_vec(f.A, g.signs)))
    return MonomialMap(mat_mul(f.A, g.A), primes, E, signs)


def iterate_exact(f: MonomialMap, n: int) -> MonomialMap:
    """``f^n`` by binary powering of the composition law."""
    if n < 1:
        raise ValueError("iterate_exact needs n >= 1")
    result = None
    base = f
    while n:
        if n & 1:
            result = base if result is None else compose_monomial(result, base)
        n >>= 1
        if n:
            base = compose_monomial(base, base)
    return result


def monomial_inverse(f: MonomialMap) -> MonomialMap:
    """Inverse in the monomial group; requires ``det A = +-1``.

    Exponents solve ``E' = -A^{-1} E`` and sign parities ``A s' = s (mod 2)``.
    """
    det = determinant(f.A)
    if abs(det) != 1:
        raise MonomialError(f"det(A) = {det}; the map is not birational")
    Ainv = tuple(tuple(det * x for x in row) for row in adjugate(f.A))
    cols = list(zip(*f.exponents)) if f.primes else []
    E = list(zip(*[tuple(-x for x in mat_vec(Ainv, col)) for col in cols])) if f.primes else [()] * f.dim
    signs = tuple(x % 2 for x in mat_vec(Ainv, f.signs))
    return MonomialMap(Ainv, f.primes, tuple(tuple(r) for r in E), signs)


def dynamical_degrees(f: MonomialMap, tol: float = 1e-10) -> list:
    """``[lambda_0, ..., lambda_d]`` with ``lambda_k`` the spectral radius of the k-th exterior power."""
    return [spectral_radius(exterior_power(f.A, k), tol) for k in range(f.dim + 1)]


def to_rational_map(f: MonomialMap, variables: Sequence[str] | None = None) -> RationalMap:
    """Homogenize on P^d with the last coordinate as the chart denominator.

    ``x_i = X_i / X_d``; negative exponents and coefficient denominators are
    cleared by one common monomial and one common integer.
    """
    d = f.dim
    variables = tuple(variables or default_variables(d))
    vecs = []
    for row in f.A:
        vecs.append(list(row) + [-sum(row)])
    vecs.append([0] * (d + 1))
    shift = [-min(v[j] for v in vecs) for j in range(d + 1)]
    coeffs = list(f.coeffs) + [Fraction(1)]
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    comps = [
        Polynomial.monomial([v[j] + shift[j] for j in range(d + 1)], int(c * den), variables)
        for v, c in zip(vecs, coeffs)
    ]
    return RationalMap.from_polynomials(comps, f"monomial {f}")


_LINE = re.compile(r"^\s*A\s*=\s*(?P<A>\[.*\])\s*(?:;\s*c\s*=\s*\((?P<c>[^)]*)\))?\s*$")


def parse_monomial(text: str) -> MonomialMap:
    """Read ``A = [[0,1],[1,1]]; c = (2,1)``; ``c`` defaults to all ones.

    >>> str(parse_monomial("A = [[0,1],[1,1]]; c = (2,1)"))
    'A = [[0,1],[1,1]]; c = (2,1)'
    """
    m = _LINE.match(text)
    if not m:
        raise MonomialError(f"expected 'A = [[..]]; c = (..)', got {text!r}")
    try:
        A = ast.literal_eval(m.group("A"))
        coeffs = None
        if m.group("c") is not None:
            coeffs = [Fraction(x.strip()) for x in m.group("c").split(",")]
    except (ValueError, SyntaxError, ZeroDivisionError) as exc:
        raise MonomialError(f"malformed monomial data {text!r}: {exc}") from None
    if not isinstance(A, list) or not all(isinstance(r, list) and all(isinstance(x, int) for x in r) for r in A):
        raise MonomialError("A must be a list of integer rows")
    return MonomialMap.from_coefficients(A, coeffs)
