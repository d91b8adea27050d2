"""Exact sparse multivariate polynomials over the integers.

A :class:`Polynomial` is an immutable map from exponent tuples to nonzero
Python integers, tied to an ordered tuple of variable names.  Terms are kept
in graded lexicographic order (total degree first, then lexicographic with the
first variable most significant) whenever an ordering is observable.

Expression grammar accepted by :func:`parse_polynomial`::

    expr   := sign? term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' nat)?
    base   := int | var | '(' expr ')' | sign base
    sign   := '+' | '-'

Whitespace is ignored.  Implicit multiplication (``2x``, ``x y``) is rejected,
so ``xy`` is always read as a single identifier.
"""
from __future__ import annotations

import heapq
import math
import random
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Monomial = tuple  # tuple[int, ...], one non-negative exponent per variable

MAX_EXPONENT = 2**31 - 1

# 2**61 - 1, used for the modular coprimality certificate in poly_gcd
_PRIME = 2305843009213693951


class PolynomialError(ValueError):
    pass


class ParseError(PolynomialError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class VariableMismatch(PolynomialError):
    pass


class NotDivisible(PolynomialError):
    pass


def _grlex_key(e):
    return (sum(e), e)


class Polynomial:
    """Immutable sparse polynomial with integer coefficients.

    Args:
        terms: mapping from exponent tuples to integer coefficients.  Zero
            coefficients are dropped.
        variables: ordered variable names; every exponent tuple has this length.
    """

    __slots__ = ("_terms", "variables", "_hash")

    def __init__(self, terms: Mapping[Iterable[int], int], variables: Sequence[str]):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise PolynomialError(f"duplicate variable names in {variables}")
        n = len(variables)
        clean = {}
        for e, c in terms.items():
            e = tuple(int(x) for x in e)
            if len(e) != n:
                raise PolynomialError(f"exponent {e} does not match {n} variables")
            if any(x < 0 for x in e):
                raise PolynomialError(f"negative exponent in {e}")
            if any(x > MAX_EXPONENT for x in e):
                raise PolynomialError(f"exponent overflow in {e}")
            c = int(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self._terms = clean
        self.variables = variables
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, variables: tuple) -> "Polynomial":
        # trusted constructor: terms already canonical
        obj = object.__new__(cls)
        obj._terms = terms
        obj.variables = variables
        obj._hash = None
        return obj

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "Polynomial":
        return cls._raw({}, tuple(variables))

    @classmethod
    def constant(cls, c: int, variables: Sequence[str]) -> "Polynomial":
        variables = tuple(variables)
        return cls._raw({(0,) * len(variables): int(c)} if c else {}, variables)

    @classmethod
    def one(cls, variables: Sequence[str]) -> "Polynomial":
        return cls.constant(1, variables)

    @classmethod
    def var(cls, name: str, variables: Sequence[str]) -> "Polynomial":
        variables = tuple(variables)
        if name not in variables:
            raise PolynomialError(f"unknown variable {name!r}")
        e = [0] * len(variables)
        e[variables.index(name)] = 1
        return cls._raw({tuple(e): 1}, variables)

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff: int, variables: Sequence[str]) -> "Polynomial":
        return cls({tuple(exponents): coeff}, variables)

    # -- basic queries ----------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def term_dict(self) -> dict:
        """A copy of the underlying exponent -> coefficient map."""
        return dict(self._terms)

    def terms(self) -> list:
        """Terms as ``(exponents, coeff)`` pairs in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant_value(self) -> int:
        if not self.is_constant():
            raise PolynomialError("polynomial is not constant")
        return next(iter(self._terms.values()), 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, var: str | int) -> int:
        i = self._index(var)
        return max((e[i] for e in self._terms), default=-1)

    def min_degree_in(self, var: str | int) -> int:
        i = self._index(var)
        return min((e[i] for e in self._terms), default=-1)

    def occurring_variables(self) -> tuple:
        present = [False] * self.nvars
        for e in self._terms:
            for i, x in enumerate(e):
                if x:
                    present[i] = True
        return tuple(v for v, p in zip(self.variables, present) if p)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def leading_term(self) -> tuple:
        if not self._terms:
            raise PolynomialError("zero polynomial has no leading term")
        e = max(self._terms, key=_grlex_key)
        return e, self._terms[e]

    def leading_coefficient(self) -> int:
        return self.leading_term()[1]

    def content(self) -> int:
        """Non-negative gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self._terms.values():
            g = math.gcd(g, c)
            if g == 1:
                break
        return g

    def max_abs_coefficient(self) -> int:
        return max((abs(c) for c in self._terms.values()), default=0)

    def _index(self, var: str | int) -> int:
        if isinstance(var, int):
            return var
        try:
            return self.variables.index(var)
        except ValueError:
            raise PolynomialError(f"unknown variable {var!r}") from None

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.variables != self.variables:
                raise VariableMismatch(f"variable contexts differ: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, int):
            return Polynomial.constant(other, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for e, c in small.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(out, self.variables)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({e: -c for e, c in self._terms.items()}, self.variables)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) - c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(out, self.variables)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Polynomial.zero(self.variables)
            return Polynomial._raw({e: c * other for e, c in self._terms.items()}, self.variables)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if not a or not b:
            return Polynomial.zero(self.variables)
        if self.degree() + other.degree() > MAX_EXPONENT:
            _check_product_exponents(a, b)
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        if len(b) == 1:
            (eb, cb), = b.items()
            return Polynomial._raw(
                {tuple(x + y for x, y in zip(ea, eb)): ca * cb for ea, ca in a.items()}, self.variables
            )
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = get(e, 0) + ca * cb
        return Polynomial._raw({e: c for e, c in out.items() if c}, self.variables)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise PolynomialError("exponent must be a non-negative integer")
        if n == 0:
            return Polynomial.one(self.variables)
        if len(self._terms) == 1:
            (e, c), = self._terms.items()
            e2 = tuple(x * n for x in e)
            if any(x > MAX_EXPONENT for x in e2):
                raise PolynomialError("exponent overflow in power")
            return Polynomial._raw({e2: c**n}, self.variables)
        if self.degree() * n > MAX_EXPONENT:
            raise PolynomialError("exponent overflow in power")
        result = Polynomial.one(self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.variables == other.variables and self._terms == other._terms
        if isinstance(other, int):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self._terms.items())))
        return self._hash

    # -- conversion helpers ----------------------------------------------

    def exquo_int(self, c: int) -> "Polynomial":
        out = {}
        for e, a in self._terms.items():
            q, r = divmod(a, c)
            if r:
                raise NotDivisible(f"coefficient {a} not divisible by {c}")
            out[e] = q
        return Polynomial._raw(out, self.variables)

    def evaluate(self, point: Mapping[str, object] | Sequence[object]):
        """Evaluate at a point given by name or by position.

        Works for any ring of values supporting ``+``, ``*`` and ``**``.
        """
        if isinstance(point, Mapping):
            vals = [point[v] for v in self.variables]
        else:
            vals = list(point)
        total = 0
        cache: list[dict] = [{} for _ in vals]
        for e, c in self._terms.items():
            t = c
            for i, x in enumerate(e):
                if x:
                    pw = cache[i].get(x)
                    if pw is None:
                        pw = cache[i][x] = vals[i] ** x
                    t = t * pw
            total = total + t
        return total

    def evaluate_mod(self, point: Sequence[int], p: int) -> int:
        total = 0
        for e, c in self._terms.items():
            t = c
            for v, x in zip(point, e):
                if x:
                    t = t * pow(v, x, p) % p
            total += t
        return total % p

    def derivative(self, var: str | int) -> "Polynomial":
        i = self._index(var)
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = c * e[i]
        return Polynomial._raw(out, self.variables)

    def coefficients_in(self, var: str | int) -> list:
        """Coefficient list ``[c_0, ..., c_k]`` with respect to one variable.

        Each ``c_j`` is a Polynomial in the same context (not involving ``var``).
        """
        i = self._index(var)
        buckets: dict[int, dict] = {}
        for e, c in self._terms.items():
            e2 = e[:i] + (0,) + e[i + 1 :]
            buckets.setdefault(e[i], {})[e2] = c
        if not buckets:
            return []
        top = max(buckets)
        return [Polynomial._raw(buckets.get(j, {}), self.variables) for j in range(top + 1)]

    @classmethod
    def from_coefficients(cls, coeffs: Sequence["Polynomial"], var: str | int, variables: Sequence[str]):
        variables = tuple(variables)
        i = var if isinstance(var, int) else variables.index(var)
        out = {}
        for j, cp in enumerate(coeffs):
            for e, c in cp._terms.items():
                e2 = e[:i] + (e[i] + j,) + e[i + 1 :]
                out[e2] = out.get(e2, 0) + c
        return cls._raw({e: c for e, c in out.items() if c}, variables)

    def with_variables(self, variables: Sequence[str]) -> "Polynomial":
        """Re-express in another variable context (a superset of the used names)."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        used = self.occurring_variables()
        missing = [v for v in used if v not in variables]
        if missing:
            raise VariableMismatch(f"variables {missing} absent from target context")
        pos = [variables.index(v) if v in variables else None for v in self.variables]
        n = len(variables)
        out = {}
        for e, c in self._terms.items():
            e2 = [0] * n
            for j, x in zip(pos, e):
                if x:
                    e2[j] = x
            out[tuple(e2)] = c
        return Polynomial._raw(out, variables)

    def monomial_content(self) -> tuple:
        """Exponents of the largest monomial dividing every term."""
        if not self._terms:
            return (0,) * self.nvars
        it = iter(self._terms)
        m = list(next(it))
        for e in it:
            for i, x in enumerate(e):
                if x < m[i]:
                    m[i] = x
        return tuple(m)

    def divide_monomial(self, m: Sequence[int]) -> "Polynomial":
        m = tuple(m)
        if not any(m):
            return self
        out = {}
        for e, c in self._terms.items():
            e2 = tuple(x - y for x, y in zip(e, m))
            if any(x < 0 for x in e2):
                raise NotDivisible("monomial does not divide polynomial")
            out[e2] = c
        return Polynomial._raw(out, self.variables)

    # -- printing ---------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, (e, c) in enumerate(self.terms()):
            mon = "*".join(
                v if x == 1 else f"{v}^{x}" for v, x in zip(self.variables, e) if x
            )
            a = abs(c)
            if mon:
                body = mon if a == 1 else f"{a}*{mon}"
            else:
                body = str(a)
            if k == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r}, {self.variables!r})"


def _check_product_exponents(a: dict, b: dict) -> None:
    n = len(next(iter(a)))
    for i in range(n):
        if max(e[i] for e in a) + max(e[i] for e in b) > MAX_EXPONENT:
            raise PolynomialError("exponent overflow in product")


# ---------------------------------------------------------------------------
# parsing


def _tokenize(text: str) -> list:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("var", text[i:j], i))
            i = j
        elif ch in "+-*^()":
            tokens.append((ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: tuple):
        self.tokens = _tokenize(text)
        self.k = 0
        self.variables = variables

    def peek(self):
        return self.tokens[self.k]

    def take(self, kind=None):
        tok = self.tokens[self.k]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1] or 'end of input'!r}", tok[2])
        self.k += 1
        return tok

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2])
        return p

    def expr(self) -> Polynomial:
        result = self.term()
        while self.peek()[0] in "+-" and self.peek()[0] != "end":
            op = self.take()[0]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.factor()
        while self.peek()[0] == "*":
            self.take()
            result = result * self.factor()
        return result

    def factor(self) -> Polynomial:
        base = self.base()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "int":
                raise ParseError("exponent must be a non-negative integer literal", tok[2])
            self.take()
            n = int(tok[1])
            if n > MAX_EXPONENT:
                raise ParseError(f"exponent {n} exceeds {MAX_EXPONENT}", tok[2])
            try:
                return base**n
            except PolynomialError as exc:
                raise ParseError(str(exc), tok[2]) from None
        return base

    def base(self) -> Polynomial:
        tok = self.peek()
        kind = tok[0]
        if kind == "int":
            self.take()
            return Polynomial.constant(int(tok[1]), self.variables)
        if kind == "var":
            self.take()
            if tok[1] not in self.variables:
                raise ParseError(f"unknown variable {tok[1]!r}", tok[2])
            return Polynomial.var(tok[1], self.variables)
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        if kind in "+-" and kind != "end":
            self.take()
            inner = self.factor()
            return -inner if kind == "-" else inner
        raise ParseError(f"unexpected token {tok[1] or 'end of input'!r}", tok[2])


def parse_polynomial(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse ``text`` into canonical sparse form over ``variables``.

    >>> str(parse_polynomial("(x+y)*(x-y)", ["x", "y"]))
    'x^2 - y^2'
    """
    return _Parser(text, tuple(variables)).parse()


# ---------------------------------------------------------------------------
# ring operations


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    if a.variables != b.variables:
        raise VariableMismatch(f"variable contexts differ: {a.variables} vs {b.variables}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise PolynomialError(f"unknown operation {op!r}")


def content_primitive(p: Polynomial) -> tuple:
    """Split ``p`` as ``content * primitive`` up to sign.

    The primitive part has coprime coefficients and a positive leading
    graded-lex coefficient.  Returns ``(content, primitive, sign)`` where
    ``sign * content * primitive == p``.
    """
    if p.is_zero():
        raise PolynomialError("content of the zero polynomial is undefined")
    c = p.content()
    sign = 1 if p.leading_coefficient() > 0 else -1
    prim = p.exquo_int(sign * c) if c != 1 or sign < 0 else p
    return c, prim, sign


def primitive(p: Polynomial) -> Polynomial:
    """Primitive part with canonical sign (zero stays zero)."""
    if p.is_zero():
        return p
    return content_primitive(p)[1]


def divexact(a: Polynomial, b: Polynomial) -> Polynomial:
    """Exact quotient ``a / b``; raises :class:`NotDivisible` otherwise."""
    if a.variables != b.variables:
        raise VariableMismatch("variable contexts differ")
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return a
    bt = b._terms
    if len(bt) == 1:
        (eb, cb), = bt.items()
        out = {}
        for e, c in a._terms.items():
            q, r = divmod(c, cb)
            e2 = tuple(x - y for x, y in zip(e, eb))
            if r or any(x < 0 for x in e2):
                raise NotDivisible("monomial division failed")
            out[e2] = q
        return Polynomial._raw(out, a.variables)
    lt_e, lt_c = b.leading_term()
    rest = [(e, c) for e, c in bt.items() if e != lt_e]
    rem = dict(a._terms)
    heap = [(-sum(e), tuple(-x for x in e)) for e in rem]
    heapq.heapify(heap)
    quot = {}
    while rem:
        while True:
            nd, ne = heapq.heappop(heap)
            e = tuple(-x for x in ne)
            if e in rem:
                break
        c = rem.pop(e)
        qe = tuple(x - y for x, y in zip(e, lt_e))
        q, r = divmod(c, lt_c)
        if r or any(x < 0 for x in qe):
            raise NotDivisible(f"{b} does not divide {a}")
        quot[qe] = q
        for eb, cb in rest:
            e2 = tuple(x + y for x, y in zip(qe, eb))
            v = rem.get(e2)
            if v is None:
                rem[e2] = -q * cb
                heapq.heappush(heap, (-sum(e2), tuple(-x for x in e2)))
            else:
                v -= q * cb
                if v:
                    rem[e2] = v
                else:
                    del rem[e2]
    return Polynomial._raw(quot, a.variables)


def divides(b: Polynomial, a: Polynomial) -> bool:
    try:
        divexact(a, b)
    except NotDivisible:
        return False
    return True


# ---------------------------------------------------------------------------
# gcd


def _uni_mod(coeffs: list, p: int) -> list:
    while coeffs and coeffs[-1] % p == 0:
        coeffs.pop()
    return [c % p for c in coeffs]


def _uni_gcd_degree_mod(a: list, b: list, p: int) -> int:
    """Degree of gcd of two dense univariate polynomials over GF(p)."""
    a, b = _uni_mod(list(a), p), _uni_mod(list(b), p)
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            f = a[-1] * inv % p
            shift = len(a) - len(b)
            for i, bc in enumerate(b):
                a[i + shift] = (a[i + shift] - f * bc) % p
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    return len(a) - 1


def _certified_coprime(a: Polynomial, b: Polynomial, rng: random.Random, tries: int = 3) -> bool:
    """Cheap sufficient test for ``gcd(a, b) == 1``.

    For each shared variable v, specialise the others at a random point mod a
    large prime keeping both leading coefficients in v nonzero.  If every such
    univariate gcd is constant then the true gcd has degree 0 in every
    variable.  A ``False`` answer is inconclusive.
    """
    shared = set(a.occurring_variables()) & set(b.occurring_variables())
    n = a.nvars
    for v in shared:
        i = a.variables.index(v)
        ca = a.coefficients_in(i)
        cb = b.coefficients_in(i)
        ok = False
        for _ in range(tries):
            pt = [rng.randrange(1, _PRIME) for _ in range(n)]
            ua = [c.evaluate_mod(pt, _PRIME) for c in ca]
            ub = [c.evaluate_mod(pt, _PRIME) for c in cb]
            if ua[-1] == 0 or ub[-1] == 0:
                continue
            if _uni_gcd_degree_mod(ua, ub, _PRIME) == 0:
                ok = True
            break
        if not ok:
            return False
    return True


def certified_coprime(a: Polynomial, b: Polynomial, seed: int = 0x5EED) -> bool:
    """True only when ``gcd(a, b) == 1`` is proven by modular specialisation.

    ``False`` means "not proven", not "shares a factor".
    """
    if a.variables != b.variables:
        raise VariableMismatch("variable contexts differ")
    if a.is_zero() or b.is_zero():
        return False
    if a.is_constant() or b.is_constant():
        return True
    return _certified_coprime(a, b, random.Random(seed))


def _uni_prem(A: list, B: list) -> list:
    dB = len(B) - 1
    lcB = B[-1]
    R = list(A)
    e = len(A) - len(B) + 1
    while R and len(R) - 1 >= dB:
        lcR = R[-1]
        shift = len(R) - 1 - dB
        R = [lcB * r for r in R]
        for i, bi in enumerate(B):
            if bi:
                R[i + shift] = R[i + shift] - lcR * bi
        while R and R[-1].is_zero():
            R.pop()
        e -= 1
    if e > 0 and R:
        f = lcB**e
        R = [f * r for r in R]
    return R


def _content_of(coeffs: list, rng) -> Polynomial:
    g = None
    for c in coeffs:
        if c.is_zero():
            continue
        g = primitive(c) if g is None else _gcd_nonzero(g, c, rng)
        if g.is_constant():
            break
    return g


def _subresultant_gcd(A: list, B: list) -> list:
    # Collins/Brown subresultant PRS on coefficient lists (deg A >= deg B >= 1)
    vars_ = A[0].variables
    g = h = Polynomial.one(vars_)
    while True:
        d = len(A) - len(B)
        R = _uni_prem(A, B)
        if not R:
            return B
        if len(R) == 1:
            return [Polynomial.one(vars_)]
        A = B
        div = g * h**d
        B = [divexact(r, div) for r in R]
        g = A[-1]
        if d == 0:
            pass
        elif d == 1:
            h = g
        else:
            h = divexact(g**d, h ** (d - 1))


def _gcd_nonzero(a: Polynomial, b: Polynomial, rng) -> Polynomial:
    """Primitive gcd of two nonzero polynomials (monomial factors included)."""
    ma, mb = a.monomial_content(), b.monomial_content()
    mono = tuple(min(x, y) for x, y in zip(ma, mb))
    a = a.divide_monomial(ma)
    b = b.divide_monomial(mb)
    mono_poly = Polynomial._raw({mono: 1}, a.variables)
    if a.is_constant() or b.is_constant():
        return mono_poly
    if a.is_monomial() or b.is_monomial():
        return mono_poly
    a, b = primitive(a), primitive(b)
    if a == b:
        return mono_poly * a
    if _certified_coprime(a, b, rng):
        return mono_poly
    return mono_poly * _gcd_rec(a, b, rng)


def _gcd_rec(a: Polynomial, b: Polynomial, rng) -> Polynomial:
    va, vb = set(a.occurring_variables()), set(b.occurring_variables())
    one = Polynomial.one(a.variables)
    if not va or not vb:
        return one
    only = (va - vb) or (vb - va)
    if only:
        v = sorted(only)[0]
        if v in va:
            a = _content_of(a.coefficients_in(v), rng)
        else:
            b = _content_of(b.coefficients_in(v), rng)
        return _gcd_nonzero(a, b, rng)
    v = min(sorted(va), key=lambda x: max(a.degree_in(x), b.degree_in(x)))
    A, B = a.coefficients_in(v), b.coefficients_in(v)
    ca, cb = _content_of(A, rng), _content_of(B, rng)
    c = _gcd_nonzero(ca, cb, rng)
    if not ca.is_constant():
        A = [divexact(x, ca) for x in A]
    if not cb.is_constant():
        B = [divexact(x, cb) for x in B]
    if len(A) < len(B):
        A, B = B, A
    if len(B) == 1:
        G = [one]
    else:
        G = _subresultant_gcd(A, B)
    if len(G) > 1:
        cg = _content_of(G, rng)
        if not cg.is_constant():
            G = [divexact(x, cg) for x in G]
    g = Polynomial.from_coefficients(G, v, a.variables)
    return primitive(c * g)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Primitive gcd with positive leading coefficient.

    Uses recursive contents and subresultant remainder sequences in the
    variable of least degree, after a cheap modular coprimality test.
    """
    if a.variables != b.variables:
        raise VariableMismatch("variable contexts differ")
    if a.is_zero() and b.is_zero():
        raise PolynomialError("gcd(0, 0) is undefined")
    if a.is_zero():
        return primitive(b)
    if b.is_zero():
        return primitive(a)
    rng = random.Random(0x5EED)
    return primitive(_gcd_nonzero(a, b, rng))


def gcd_list(polys: Iterable[Polynomial]) -> Polynomial:
    """Primitive gcd of several polynomials (zero entries ignored)."""
    rng = random.Random(0x5EED)
    g = None
    for p in polys:
        if p.is_zero():
            continue
        g = primitive(p) if g is None else _gcd_nonzero(g, p, rng)
        if g.is_constant():
            return primitive(g)
    if g is None:
        raise PolynomialError("gcd of zero polynomials is undefined")
    return primitive(g)


def squarefree_part(p: Polynomial) -> Polynomial:
    """Primitive product of the distinct irreducible factors of ``p``."""
    if p.is_zero():
        raise PolynomialError("square-free part of zero is undefined")
    p = primitive(p)
    if p.is_constant():
        return p
    if p.is_monomial():
        e = tuple(1 if x else 0 for x in p.leading_term()[0])
        return Polynomial._raw({e: 1}, p.variables)
    parts = [p.derivative(v) for v in p.occurring_variables()]
    g = gcd_list([p] + parts)
    return primitive(divexact(p, g)) if not g.is_constant() else p


# ---------------------------------------------------------------------------
# substitution and (de)homogenization


def substitute(p: Polynomial, assignment: Mapping[str, Polynomial]) -> Polynomial:
    """Replace each variable of ``p`` by a polynomial.

    All assigned polynomials must share one variable context, which becomes
    the context of the result.
    """
    used = p.occurring_variables()
    missing = [v for v in used if v not in assignment]
    if missing:
        raise PolynomialError(f"no assignment for variables {missing}")
    targets = [assignment[v] for v in used]
    if targets:
        ctx = targets[0].variables
        if any(t.variables != ctx for t in targets):
            raise VariableMismatch("assigned polynomials must share one variable context")
    elif assignment:
        ctx = next(iter(assignment.values())).variables
    else:
        ctx = p.variables
    idx = [p.variables.index(v) for v in used]
    caches = [{1: assignment[v]} for v in used]

    def power(k: int, n: int) -> Polynomial:
        cache = caches[k]
        got = cache.get(n)
        if got is None:
            half = power(k, n // 2)
            got = half * half
            if n % 2:
                got = got * cache[1]
            cache[n] = got
        return got

    acc: dict = {}
    zero_e = (0,) * len(ctx)
    for e, c in p._terms.items():
        term = None
        for k, i in enumerate(idx):
            if e[i]:
                f = power(k, e[i])
                term = f if term is None else term * f
        if term is None:
            acc[zero_e] = acc.get(zero_e, 0) + c
            continue
        for te, tc in term._terms.items():
            acc[te] = acc.get(te, 0) + c * tc
    return Polynomial._raw({e: c for e, c in acc.items() if c}, tuple(ctx))


def homogenize(p: Polynomial, new_var: str, target_degree: int, position: int | None = None) -> Polynomial:
    """Homogenize to ``target_degree`` with a new variable.

    The new variable is appended (or inserted at ``position``).
    """
    if new_var in p.variables:
        raise PolynomialError(f"variable {new_var!r} already present")
    if target_degree < p.degree():
        raise PolynomialError(f"target degree {target_degree} below degree {p.degree()}")
    pos = p.nvars if position is None else position
    variables = p.variables[:pos] + (new_var,) + p.variables[pos:]
    out = {}
    for e, c in p._terms.items():
        out[e[:pos] + (target_degree - sum(e),) + e[pos:]] = c
    return Polynomial._raw(out, variables)


def dehomogenize(p: Polynomial, var: str) -> Polynomial:
    """Set ``var = 1`` and drop it from the variable context."""
    if not p.is_homogeneous():
        raise PolynomialError("dehomogenize expects a homogeneous polynomial")
    i = p._index(var)
    variables = p.variables[:i] + p.variables[i + 1 :]
    out: dict = {}
    for e, c in p._terms.items():
        e2 = e[:i] + e[i + 1 :]
        out[e2] = out.get(e2, 0) + c
    return Polynomial._raw({e: c for e, c in out.items() if c}, variables)


# ---------------------------------------------------------------------------
# resultants


def _int_resultant(a: list, b: list) -> int:
    """Resultant of dense integer coefficient lists with formal degrees.

    ``a`` and ``b`` are low-to-high lists of lengths ``p + 1`` and ``q + 1``;
    leading entries may be zero.
    """
    p, q = len(a) - 1, len(b) - 1
    a = list(a)
    b = list(b)
    pa = p
    while pa >= 0 and a[pa] == 0:
        pa -= 1
    qb = q
    while qb >= 0 and b[qb] == 0:
        qb -= 1
    if pa < 0 or qb < 0:
        return 0 if p + q > 0 else 1
    factor = 1
    if pa < p and qb < q:
        return 0
    if pa < p:
        factor = ((-1) ** q * b[q]) ** (p - pa)
        p = pa
    elif qb < q:
        factor = (-1) ** (p * q) * ((-1) ** p * a[p]) ** (q - qb) * (-1) ** (p * qb)
        q = qb
    return factor * _int_resultant_actual(a[: p + 1], b[: q + 1])


def _int_prem(A: list, B: list) -> list:
    dB = len(B) - 1
    lcB = B[-1]
    R = list(A)
    e = len(A) - len(B) + 1
    while R and len(R) - 1 >= dB:
        lcR = R[-1]
        shift = len(R) - 1 - dB
        R = [lcB * r for r in R]
        for i in range(dB):
            R[i + shift] -= lcR * B[i]
        R.pop()
        while R and R[-1] == 0:
            R.pop()
        e -= 1
    if e > 0 and R:
        f = lcB**e
        R = [f * r for r in R]
    return R


def _int_resultant_actual(A: list, B: list) -> int:
    # integer subresultant PRS (no rational arithmetic); A, B have nonzero leading entries
    a = math.gcd(*A)
    b = math.gcd(*B)
    A = [x // a for x in A]
    B = [x // b for x in B]
    s = 1
    t = a ** (len(B) - 1) * b ** (len(A) - 1)
    if len(A) < len(B):
        A, B = B, A
        if (len(A) - 1) % 2 and (len(B) - 1) % 2:
            s = -1
    g = h = 1
    while len(B) > 1:
        dA, dB = len(A) - 1, len(B) - 1
        d = dA - dB
        if dA % 2 and dB % 2:
            s = -s
        R = _int_prem(A, B)
        if not R:
            return 0
        A = B
        div = g * h**d
        B = [r // div for r in R]
        g = A[-1]
        if d == 1:
            h = g
        elif d > 1:
            h = g**d // h ** (d - 1)
    dA = len(A) - 1
    h = B[0] ** dA // h ** (dA - 1) if dA >= 1 else h
    return s * t * h


def _newton_interpolate(nodes: list, values: list) -> list:
    """Monomial-basis coefficients of the interpolating polynomial."""
    n = len(nodes)
    dd = [Fraction(v) for v in values]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - j])
    coeffs = [Fraction(0)] * n
    coeffs[0] = dd[n - 1]
    deg = 0
    for k in range(n - 2, -1, -1):
        # coeffs <- coeffs * (x - nodes[k]) + dd[k]
        deg += 1
        for i in range(deg, 0, -1):
            coeffs[i] = coeffs[i - 1] - nodes[k] * coeffs[i]
        coeffs[0] = dd[k] - nodes[k] * coeffs[0]
    return coeffs


def _interpolate_grid(bounds: list, func) -> dict:
    """Interpolate an integer polynomial from values on the grid prod(range(b+1))."""

    def rec(k: int, prefix: tuple) -> dict:
        if k == len(bounds):
            v = func(prefix)
            return {(): v} if v else {}
        nodes = list(range(bounds[k] + 1))
        subs = [rec(k + 1, prefix + (x,)) for x in nodes]
        keys = set()
        for s in subs:
            keys.update(s)
        out = {}
        for key in keys:
            ys = [s.get(key, 0) for s in subs]
            if not any(ys):
                continue
            coeffs = _newton_interpolate(nodes, ys)
            for j, c in enumerate(coeffs):
                if c:
                    if c.denominator != 1:
                        raise PolynomialError("non-integral interpolation coefficient")
                    out[(j,) + key] = int(c)
        return out

    return rec(0, ())


def resultant_univar(
    a: Polynomial, b: Polynomial, var: str, degrees: tuple | None = None
) -> Polynomial:
    """Sylvester resultant of ``a`` and ``b`` with respect to ``var``.

    ``degrees`` optionally fixes formal degrees (as for dehomogenized binary
    forms whose leading coefficient may vanish).  The result lives in the same
    variable context and does not involve ``var``.  Computed by exact
    evaluation at integer grid points and interpolation; degree bounds come
    from the Sylvester matrix.
    """
    if a.variables != b.variables:
        raise VariableMismatch("variable contexts differ")
    ctx = a.variables
    i = a._index(var)
    A, B = a.coefficients_in(i), b.coefficients_in(i)
    pa, qb = len(A) - 1, len(B) - 1
    p, q = degrees if degrees is not None else (pa, qb)
    if p < 1 or q < 1 or pa > p or qb > q:
        raise PolynomialError(f"inputs must have positive (formal) degree in {var!r}")
    zero = Polynomial.zero(ctx)
    if pa < 0 and qb < 0:
        return zero
    factor = Polynomial.one(ctx)
    if pa < p and qb < q:
        return zero
    if pa < p:
        factor = ((-1) ** q * B[q]) ** (p - pa)
        p = pa
    elif qb < q:
        sign = (-1) ** (p * q + p * qb)
        factor = sign * ((-1) ** p * A[p]) ** (q - qb)
        q = qb
    if p == 0:
        return factor * A[0] ** q
    if q == 0:
        return factor * B[0] ** p
    others = sorted(
        set(v for c in A + B for v in c.occurring_variables()), key=ctx.index
    )
    if not others:
        r = _int_resultant_actual([c.constant_value() for c in A], [c.constant_value() for c in B])
        return factor * r
    oidx = [ctx.index(v) for v in others]
    bounds = [
        q * max(0, max(c.degree_in(j) for c in A)) + p * max(0, max(c.degree_in(j) for c in B))
        for j in oidx
    ]
    n = len(ctx)

    def value(pt: tuple) -> int:
        full = [0] * n
        for j, x in zip(oidx, pt):
            full[j] = x
        av = [c.evaluate(full) for c in A]
        bv = [c.evaluate(full) for c in B]
        return _int_resultant(av, bv)

    grid = _interpolate_grid(bounds, value)
    out = {}
    for key, c in grid.items():
        e = [0] * n
        for j, x in zip(oidx, key):
            e[j] = x
        out[tuple(e)] = c
    return factor * Polynomial._raw(out, ctx)


def bareiss_determinant(matrix: list):
    """Fraction-free determinant for square matrices over an integral domain.

    Entries may be ints or Polynomials (exact division via :func:`divexact`).
    """
    n = len(matrix)
    if n == 0:
        return 1
    M = [list(row) for row in matrix]

    def is_zero(x):
        return x == 0 if isinstance(x, int) else x.is_zero()

    def exq(x, y):
        if isinstance(x, int) and isinstance(y, int):
            q, r = divmod(x, y)
            if r:
                raise NotDivisible("inexact integer division in Bareiss")
            return q
        if isinstance(y, int):
            return x.exquo_int(y)
        if isinstance(x, int):
            x = Polynomial.constant(x, y.variables)
        return divexact(x, y)

    sign = 1
    prev = 1
    for k in range(n - 1):
        if is_zero(M[k][k]):
            for r in range(k + 1, n):
                if not is_zero(M[r][k]):
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = exq(M[i][j] * piv - M[i][k] * M[k][j], prev)
        prev = piv
    det = M[n - 1][n - 1]
    return -det if sign < 0 else det


def sylvester_matrix(a: Polynomial, b: Polynomial, var: str, degrees: tuple | None = None) -> list:
    A, B = a.coefficients_in(var), b.coefficients_in(var)
    p, q = degrees if degrees is not None else (len(A) - 1, len(B) - 1)
    zero = Polynomial.zero(a.variables)
    A = A + [zero] * (p + 1 - len(A))
    B = B + [zero] * (q + 1 - len(B))
    size = p + q
    rows = []
    for r in range(q):
        row = [zero] * size
        for j in range(p + 1):
            row[r + j] = A[p - j]
        rows.append(row)
    for r in range(p):
        row = [zero] * size
        for j in range(q + 1):
            row[r + j] = B[q - j]
        rows.append(row)
    return rows


def sylvester_resultant(a: Polynomial, b: Polynomial, var: str, degrees: tuple | None = None) -> Polynomial:
    """Resultant as the literal Sylvester determinant (Bareiss elimination).

    Independent of :func:`resultant_univar`; slower, used as a cross-check.
    """
    M = sylvester_matrix(a, b, var, degrees)
    if not M:
        return Polynomial.one(a.variables)
    det = bareiss_determinant(M)
    if isinstance(det, int):
        return Polynomial.constant(det, a.variables)
    return det
