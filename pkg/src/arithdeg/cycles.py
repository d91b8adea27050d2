"""Hypersurfaces and parametrized curves as cycles, their heights and orbits.

The height of a hypersurface is ``deg(V) + log(c_V)`` where ``c_V`` is the
largest absolute coefficient of its primitive integer equation.  Cycles
``sum m_i V_i`` get the multiplicity-weighted sum of the part heights.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from .poly import (
    Polynomial,
    certified_coprime,
    divexact,
    gcd_list,
    homogenize,
    parse_polynomial,
    poly_gcd,
    primitive,
    resultant_univar,
    squarefree_part,
    substitute,
)
from .ratmap import RationalMap, default_variables, jacobian_determinant

PARAMS = ("t", "u")


class CycleError(ValueError):
    pass


class CollapseError(CycleError):
    """The image of a cycle degenerated (zero form or only exceptional factors)."""


class ImplicitizationError(CycleError):
    pass


@dataclass(frozen=True)
class Hypersurface:
    """Reduced hypersurface given by a primitive form with positive leading coefficient."""

    form: Polynomial

    def __post_init__(self):
        f = self.form
        if f.is_zero() or f.degree() < 1:
            raise CycleError("a hypersurface needs a form of positive degree")
        if not f.is_homogeneous():
            raise CycleError(f"form {f} is not homogeneous")
        if f.content() != 1 or f.leading_coefficient() < 0:
            raise CycleError(f"form {f} is not primitive with canonical sign")

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "Hypersurface":
        return cls(primitive(p))

    @classmethod
    def parse(cls, text: str, variables: Sequence[str]) -> "Hypersurface":
        return cls.from_polynomial(parse_polynomial(text, variables))

    @property
    def degree(self) -> int:
        return self.form.degree()

    @property
    def dim(self) -> int:
        return self.form.nvars - 1

    def __str__(self) -> str:
        return str(self.form)


@dataclass(frozen=True)
class Cycle:
    """Formal sum of distinct hypersurfaces with positive multiplicities."""

    parts: tuple = ()

    def __post_init__(self):
        merged: dict = {}
        for V, m in self.parts:
            if not isinstance(V, Hypersurface):
                raise CycleError("cycle parts must be Hypersurface instances")
            if m < 1:
                raise CycleError("multiplicities must be positive")
            merged[V] = merged.get(V, 0) + int(m)
        object.__setattr__(self, "parts", tuple(merged.items()))

    @property
    def degree(self) -> int:
        return sum(m * V.degree for V, m in self.parts)

    def __str__(self) -> str:
        if not self.parts:
            return "0"
        return " + ".join(f"{m}*({V})" if m != 1 else f"({V})" for V, m in self.parts)


@dataclass(frozen=True)
class ParamCurve:
    """Rational curve ``[g_0(t,u) : ... : g_d(t,u)]`` by binary forms.

    Components share one degree, have no common factor and no common
    integer content.  Use :meth:`from_polynomials` to reduce raw forms.
    """

    components: tuple

    def __post_init__(self):
        comps = tuple(self.components)
        if len(comps) < 2:
            raise CycleError("a curve in P^d needs d+1 >= 2 coordinates")
        ctx = comps[0].variables
        if ctx != PARAMS:
            raise CycleError(f"parameter forms must use variables {PARAMS}")
        degs = set()
        for c in comps:
            if c.variables != ctx or not c.is_homogeneous():
                raise CycleError(f"{c} is not a binary form in t, u")
            if not c.is_zero():
                degs.add(c.degree())
        if not degs:
            raise CycleError("all coordinates vanish identically")
        if len(degs) > 1:
            raise CycleError(f"coordinates have different degrees {sorted(degs)}")
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_polynomials(cls, comps: Sequence[Polynomial]) -> "ParamCurve":
        comps = list(comps)
        if all(c.is_zero() for c in comps):
            raise CollapseError("parametrization vanishes identically")
        g = gcd_list(comps)
        if not g.is_constant():
            comps = [divexact(c, g) if not c.is_zero() else c for c in comps]
        content = reduce(math.gcd, (c.content() for c in comps))
        if next(c for c in comps if not c.is_zero()).leading_coefficient() < 0:
            content = -content
        if content != 1:
            comps = [c.exquo_int(content) for c in comps]
        if all(c.degree() <= 0 for c in comps):
            raise CollapseError("curve is contracted to a point")
        return cls(tuple(comps))

    @classmethod
    def parse(cls, texts: Sequence[str]) -> "ParamCurve":
        return cls.from_polynomials([parse_polynomial(t, PARAMS) for t in texts])

    @property
    def degree(self) -> int:
        return max(c.degree() for c in self.components)

    @property
    def dim(self) -> int:
        return len(self.components) - 1

    def __str__(self) -> str:
        return "[" + " : ".join(str(c) for c in self.components) + "]"


def log_max_coefficient(V: Hypersurface) -> float:
    return math.log(V.form.max_abs_coefficient())


def hypersurface_height(V: Hypersurface) -> float:
    return V.degree + log_max_coefficient(V)


def cycle_height(C: Cycle) -> float:
    return sum(m * hypersurface_height(V) for V, m in C.parts)


def _strip_factors_of(G: Polynomial, J: Polynomial) -> Polynomial:
    while True:
        h = poly_gcd(G, J)
        if h.is_constant():
            return G
        G = divexact(G, h)


def pushforward_by_inverse(f_inv: RationalMap, V: Hypersurface) -> Cycle:
    """Image of ``V`` under a birational map, given that map's inverse.

    The image is cut out by ``V o f_inv`` once the curves contracted by
    ``f_inv`` are divided out.  Contracted curves are exactly the components
    of the Jacobian determinant of a birational map, so every factor shared
    with that determinant is removed.
    """
    if f_inv.variables != V.form.variables:
        raise CycleError("hypersurface and map use different coordinates")
    G = substitute(V.form, dict(zip(f_inv.variables, f_inv.components)))
    if G.is_zero():
        raise CollapseError(f"{V} pulls back to zero")
    J = jacobian_determinant(f_inv.components)
    if J.is_zero():
        raise CycleError("inverse map is not dominant")
    G = _strip_factors_of(G, J)
    if G.degree() < 1:
        raise CollapseError(f"{V} has no non-exceptional image component")
    return Cycle(((Hypersurface.from_polynomial(G), 1),))


def push_param_curve(f: RationalMap, gamma: ParamCurve) -> ParamCurve:
    if f.dim != gamma.dim:
        raise CycleError("curve and map live in different projective spaces")
    assignment = dict(zip(f.variables, gamma.components))
    comps = [
        substitute(c, assignment) if not c.is_zero() else Polynomial.zero(PARAMS) for c in f.components
    ]
    if all(c.is_zero() for c in comps):
        raise CollapseError("curve lies in the indeterminacy locus of the map")
    return ParamCurve.from_polynomials(comps)


def parametrize_line(V: Hypersurface) -> ParamCurve:
    """Degree-one parametrization ``t*P + u*Q`` of a line in P^2."""
    if V.degree != 1 or V.dim != 2:
        raise CycleError(f"{V} is not a line in P^2")
    a, b, c = (V.form.term_dict().get(tuple(int(i == j) for j in range(3)), 0) for i in range(3))
    cands = [(b, -a, 0), (c, 0, -a), (0, c, -b)]
    cands = [v for v in cands if any(v)]
    P = cands[0]
    Q = next(
        v for v in cands[1:]
        if any(P[i] * v[j] - P[j] * v[i] for i in range(3) for j in range(3))
    )
    t, u = Polynomial.var("t", PARAMS), Polynomial.var("u", PARAMS)
    return ParamCurve.from_polynomials([P[i] * t + Q[i] * u for i in range(3)])


def _is_squarefree(R: Polynomial) -> bool:
    for v in R.occurring_variables():
        if certified_coprime(R, R.derivative(v)):
            return True
    return False


def implicitize_param_curve(gamma: ParamCurve, variables: Sequence[str] | None = None) -> tuple:
    """Equation and multiplicity of the image of a parametrized plane curve.

    Returns ``(C, m)`` with ``gamma_* [P^1] = m * C``.  The parameter is
    eliminated from ``X_i g_j - X_j g_i`` and ``X_k g_j - X_j g_k`` with pivot
    ``j = 2`` (or the first coordinate not identically zero).  That resultant
    equals ``X_j^(N) * C^m`` up to a constant, so powers of ``X_j`` are
    divided out and the remainder is checked to be an exact m-th power.
    """
    if gamma.dim != 2:
        raise ImplicitizationError("implicitization is implemented for plane curves only")
    N = gamma.degree
    if N < 1:
        raise ImplicitizationError("constant curve has no image curve")
    variables = tuple(variables or default_variables(2))
    g = gamma.components
    j = 2 if not g[2].is_zero() else next(k for k in range(3) if not g[k].is_zero())
    i, k = [x for x in range(3) if x != j]
    # ring (t, x_i, x_k) with u = 1 and x_j = 1
    ring = ("t", variables[i], variables[k])

    def lift(form: Polynomial) -> Polynomial:
        out = {}
        for (et, eu), c in form.term_dict().items():
            out[(et, 0, 0)] = c
        return Polynomial(out, ring)

    gi, gj, gk = lift(g[i]), lift(g[j]), lift(g[k])
    xi = Polynomial.var(variables[i], ring)
    xk = Polynomial.var(variables[k], ring)
    A = xi * gj - gi
    B = xk * gj - gk
    r = resultant_univar(A, B, "t", degrees=(N, N))
    if r.is_zero():
        raise ImplicitizationError(f"resultant vanishes identically for {gamma}")
    r2 = r.with_variables((variables[i], variables[k]))
    R = homogenize(r2, variables[j], 2 * N, position=j)
    R = R.with_variables(variables)
    mono = [0, 0, 0]
    mono[j] = R.min_degree_in(j)
    R = primitive(R.divide_monomial(mono))
    if R.degree() < 1:
        raise ImplicitizationError(f"only extraneous factors found for {gamma}")
    C = R if _is_squarefree(R) else squarefree_part(R)
    if N % C.degree():
        raise ImplicitizationError(
            f"parameter degree {N} is not a multiple of image degree {C.degree()}"
        )
    m = N // C.degree()
    if primitive(C**m) != R:
        raise ImplicitizationError(f"eliminant is not the {m}-th power of {C}")
    return Hypersurface(C), m


@dataclass(frozen=True)
class CycleOrbitRow:
    n: int
    degree: int
    logmaxcoeff: float
    height: float
    multiplicity: int
    cycle: Cycle


def _row(n: int, cycle: Cycle, multiplicity: int) -> CycleOrbitRow:
    return CycleOrbitRow(
        n=n,
        degree=cycle.degree,
        logmaxcoeff=sum(m * log_max_coefficient(V) for V, m in cycle.parts),
        height=cycle_height(cycle),
        multiplicity=multiplicity,
        cycle=cycle,
    )


class CycleOrbit(list):
    """Rows for ``n = 0..N`` (row 0 is the source); ``stop_reason`` explains an early stop."""

    def __init__(self, rows=(), stop_reason: str | None = None):
        super().__init__(rows)
        self.stop_reason = stop_reason

    @property
    def truncated(self) -> bool:
        return self.stop_reason is not None

    def heights(self) -> list:
        return [r.height for r in self]


def curve_orbit_heights(
    f: RationalMap,
    source,
    N: int,
    strategy: str = "param",
    inverse: RationalMap | None = None,
) -> CycleOrbit:
    """Heights of the cycles ``f^n_* V`` for ``n = 0..N``.

    Args:
        source: a :class:`ParamCurve` (strategy ``"param"``) or a
            :class:`Hypersurface` (strategy ``"inverse-pullback"``).
        inverse: the inverse of ``f``, required for ``"inverse-pullback"``.
    """
    if N < 1:
        raise ValueError("horizon must be at least 1")
    orbit = CycleOrbit()
    if strategy == "param":
        if not isinstance(source, ParamCurve):
            raise CycleError("param strategy needs a ParamCurve source")
        gamma = source
        C, m = implicitize_param_curve(gamma, f.variables)
        orbit.append(_row(0, Cycle(((C, m),)), m))
        for n in range(1, N + 1):
            try:
                gamma = push_param_curve(f, gamma)
                C, m = implicitize_param_curve(gamma, f.variables)
            except CycleError as exc:
                orbit.stop_reason = f"step {n}: {exc}"
                break
            orbit.append(_row(n, Cycle(((C, m),)), m))
    elif strategy == "inverse-pullback":
        if inverse is None:
            raise CycleError("inverse-pullback strategy needs the inverse map")
        if not isinstance(source, Hypersurface):
            raise CycleError("inverse-pullback strategy needs a Hypersurface source")
        V = source
        orbit.append(_row(0, Cycle(((V, 1),)), 1))
        for n in range(1, N + 1):
            try:
                cyc = pushforward_by_inverse(inverse, V)
            except CycleError as exc:
                orbit.stop_reason = f"step {n}: {exc}"
                break
            V = cyc.parts[0][0]
            orbit.append(_row(n, cyc, 1))
    else:
        raise CycleError(f"unknown strategy {strategy!r}")
    return orbit
