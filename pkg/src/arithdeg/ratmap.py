"""Dominant rational self-maps of P^d given by coprime homogeneous forms."""
from __future__ import annotations

import logging
import math
import random
import warnings
from dataclasses import dataclass, field
from functools import reduce
from typing import Sequence

from .poly import (
    Polynomial,
    PolynomialError,
    bareiss_determinant,
    divexact,
    gcd_list,
    parse_polynomial,
    poly_gcd,
    resultant_univar,
    substitute,
)

log = logging.getLogger(__name__)


class MapError(ValueError):
    pass


class NotDominantWarning(UserWarning):
    pass


class TermLimitExceeded(RuntimeError):
    """An iterate grew past the term-count guard; ``partial`` holds finished data."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


def default_variables(d: int) -> tuple:
    if d <= 3:
        return ("X", "Y", "Z", "W")[: d + 1]
    return tuple(f"X{i}" for i in range(d + 1))


def _reduce_components(components: Sequence[Polynomial]) -> tuple:
    """Remove common polynomial factors and integer content; fix the sign."""
    comps = list(components)
    if all(c.is_zero() for c in comps):
        raise MapError("all components vanish identically")
    g = gcd_list(comps)
    if not g.is_constant():
        comps = [divexact(c, g) if not c.is_zero() else c for c in comps]
    content = reduce(math.gcd, (c.content() for c in comps))
    first = next(c for c in comps if not c.is_zero())
    if first.leading_coefficient() < 0:
        content = -content
    if content != 1:
        comps = [c.exquo_int(content) for c in comps]
    return tuple(comps)


@dataclass(frozen=True)
class RationalMap:
    """A rational map ``P^d --> P^d`` in reduced form.

    Components are homogeneous of one common degree, jointly coprime (no
    common polynomial factor, no common integer content) and the first
    nonzero component has a positive leading coefficient.  Construct via
    :func:`make_map` or :meth:`from_polynomials`.
    """

    components: tuple
    provenance: str = field(default="", compare=False)

    def __post_init__(self):
        comps = tuple(self.components)
        if len(comps) < 2:
            raise MapError("a map of P^d needs d+1 >= 2 components")
        ctx = comps[0].variables
        if len(ctx) != len(comps):
            raise MapError(f"{len(comps)} components but {len(ctx)} variables")
        degs = set()
        for c in comps:
            if c.variables != ctx:
                raise MapError("components must share one variable context")
            if not c.is_homogeneous():
                raise MapError(f"component {c} is not homogeneous")
            if not c.is_zero():
                degs.add(c.degree())
        if not degs:
            raise MapError("all components vanish identically")
        if len(degs) > 1:
            raise MapError(f"components have different degrees {sorted(degs)}")
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_polynomials(cls, components: Sequence[Polynomial], provenance: str = "") -> "RationalMap":
        return cls(_reduce_components(components), provenance)

    @property
    def dim(self) -> int:
        return len(self.components) - 1

    @property
    def variables(self) -> tuple:
        return self.components[0].variables

    @property
    def degree(self) -> int:
        return max(c.degree() for c in self.components)

    def term_count(self) -> int:
        return sum(len(c) for c in self.components)

    def __str__(self) -> str:
        return "[" + " : ".join(str(c) for c in self.components) + "]"

    def to_text(self) -> str:
        """Map-file text: header line then one component per line."""
        lines = [f"P{self.dim} vars {','.join(self.variables)}"]
        lines += [str(c) for c in self.components]
        return "\n".join(lines) + "\n"


def identity_map(d: int, variables: Sequence[str] | None = None) -> RationalMap:
    variables = tuple(variables or default_variables(d))
    return RationalMap(tuple(Polynomial.var(v, variables) for v in variables), "identity")


def jacobian_determinant(components: Sequence[Polynomial]) -> Polynomial:
    ctx = components[0].variables
    M = [[c.derivative(v) for v in ctx] for c in components]
    det = bareiss_determinant(M)
    if isinstance(det, int):
        return Polynomial.constant(det, ctx)
    return det


def check_dominant(f: RationalMap) -> bool:
    """True iff the homogeneous Jacobian determinant is not identically zero.

    By Euler's relation this has the same rank as the Jacobian of any affine
    chart, so it decides dominance in characteristic zero.
    """
    ctx = f.variables
    rng = random.Random(20240611)
    # a nonzero value at one point is a proof; a zero value is not
    for _ in range(2):
        pt = [rng.randint(-97, 97) for _ in ctx]
        rows = [[c.derivative(v).evaluate(pt) for v in ctx] for c in f.components]
        if bareiss_determinant(rows) != 0:
            return True
    return not jacobian_determinant(f.components).is_zero()


def make_map(
    component_texts: Sequence[str],
    d: int | None = None,
    variables: Sequence[str] | None = None,
    on_nondominant: str = "error",
    provenance: str = "",
) -> RationalMap:
    """Parse, reduce and validate a map given by component expressions.

    Args:
        component_texts: d+1 homogeneous forms.
        d: ambient dimension (defaults to ``len(component_texts) - 1``).
        variables: coordinate names, default ``X,Y,Z[,W]``.
        on_nondominant: ``"error"``, ``"warn"`` or ``"ignore"``.
    """
    if d is None:
        d = len(component_texts) - 1
    if len(component_texts) != d + 1:
        raise MapError(f"P^{d} needs {d + 1} components, got {len(component_texts)}")
    variables = tuple(variables or default_variables(d))
    if len(variables) != d + 1:
        raise MapError(f"P^{d} needs {d + 1} variable names")
    polys = [parse_polynomial(t, variables) for t in component_texts]
    for p in polys:
        if not p.is_homogeneous():
            raise MapError(f"component {p} is not homogeneous")
    degs = {p.degree() for p in polys if not p.is_zero()}
    if len(degs) > 1:
        raise MapError(f"components have different degrees {sorted(degs)}")
    f = RationalMap.from_polynomials(polys, provenance or "[" + " : ".join(component_texts) + "]")
    if on_nondominant != "ignore" and not check_dominant(f):
        msg = f"map {f} is not dominant"
        if on_nondominant == "error":
            raise MapError(msg)
        warnings.warn(msg, NotDominantWarning, stacklevel=2)
    return f


def parse_map_file(text: str, on_nondominant: str = "error") -> RationalMap:
    """Read the ``P<d> vars X,Y,Z`` header plus one form per line."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise MapError("empty map file")
    head = lines[0].split()
    if len(head) != 3 or not head[0].startswith("P") or head[1] != "vars":
        raise MapError(f"bad map header {lines[0]!r}; expected 'P<d> vars X,Y,Z'")
    try:
        d = int(head[0][1:])
    except ValueError:
        raise MapError(f"bad dimension in header {lines[0]!r}") from None
    variables = [v.strip() for v in head[2].split(",")]
    return make_map(lines[1:], d, variables, on_nondominant=on_nondominant)


def compose(f: RationalMap, g: RationalMap) -> RationalMap:
    """``f o g`` with common factors removed."""
    if f.dim != g.dim:
        raise MapError("maps act on projective spaces of different dimension")
    gc = g.components
    if f.variables != g.variables:
        gc = tuple(c.with_variables(f.variables) for c in gc)
    assignment = dict(zip(f.variables, gc))
    comps = [substitute(c, assignment) if not c.is_zero() else Polynomial.zero(f.variables) for c in f.components]
    if all(c.is_zero() for c in comps):
        raise MapError("composition is identically zero (image lies in the indeterminacy locus)")
    return RationalMap(_reduce_components(comps), f"({f.provenance}) o ({g.provenance})")


def iterate(f: RationalMap, n: int, max_terms: int | None = None) -> RationalMap:
    if n < 0:
        raise ValueError("iterate needs n >= 0")
    result = identity_map(f.dim, f.variables)
    for k in range(n):
        result = compose(f, result) if k else f
        if max_terms is not None and result.term_count() > max_terms:
            raise TermLimitExceeded(f"f^{k + 1} has {result.term_count()} terms (limit {max_terms})")
    return result


@dataclass
class DegreeSequence:
    """Degrees ``deg_1(f^n)`` for ``n = 0..N`` after full reduction."""

    description: str
    values: list  # [(n, degree)], starting at n = 0

    @property
    def degrees(self) -> list:
        """Degrees for ``n >= 1``."""
        return [d for n, d in self.values if n >= 1]


def degree_sequence(f: RationalMap, N: int, max_terms: int | None = 10**6) -> DegreeSequence:
    """Exact degrees of the reduced iterates ``f^1 .. f^N``.

    Iterates are built as ``f o f^(n-1)`` so the large map is always the one
    substituted into the small one.  Exceeding ``max_terms`` raises
    :class:`TermLimitExceeded` carrying the sequence computed so far.
    """
    if N < 1:
        raise ValueError("horizon must be at least 1")
    seq = DegreeSequence(str(f), [(0, 1)])
    current = f
    for n in range(1, N + 1):
        if n > 1:
            current = compose(f, current)
        seq.values.append((n, current.degree))
        if max_terms is not None and current.term_count() > max_terms and n < N:
            raise TermLimitExceeded(
                f"f^{n} has {current.term_count()} terms (limit {max_terms})", partial=seq
            )
    return seq


def verify_inverse(f: RationalMap, g: RationalMap) -> bool:
    if f.dim != g.dim:
        return False
    ident = identity_map(f.dim, f.variables)
    try:
        return compose(f, g) == ident and compose(g, f) == ident
    except MapError:
        return False


class TopologicalDegreeError(RuntimeError):
    pass


def _random_unimodular(n: int, rng: random.Random) -> list:
    # product of random elementary shears, integer inverse exists
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2)
        k = rng.randint(-5, 5)
        for col in range(n):
            M[i][col] += k * M[j][col]
    return M


def topological_degree_dim2(f: RationalMap, seed: int, max_attempts: int = 8) -> int:
    """Number of preimages of a generic point for a dominant map of P^2.

    For random targets Q the two cross-product curves ``Q_z F_i - Q_i F_z``
    meet in the fibre over Q plus the base locus.  Eliminating one coordinate
    (after a random unimodular change of coordinates) gives a binary form per
    target; the factors shared by three targets are the base-locus
    contributions and are discarded.
    """
    if f.dim != 2:
        raise MapError("topological_degree_dim2 needs a map of P^2")
    rng = random.Random(seed)
    ctx = f.variables
    e = f.degree
    diagnostics = []
    for attempt in range(max_attempts):
        L = _random_unimodular(3, rng)
        lin = [
            Polynomial({tuple(int(i == j) for j in range(3)): L[r][i] for i in range(3)}, ctx)
            for r in range(3)
        ]
        assignment = dict(zip(ctx, lin))
        F = [substitute(c, assignment) for c in f.components]
        forms = []
        for _ in range(3):
            a, b = rng.randint(-100, 100), rng.randint(-100, 100)
            c = rng.choice([k for k in range(-100, 101) if k])
            G1 = c * F[0] - a * F[2]
            G2 = c * F[1] - b * F[2]
            if G1.is_zero() or G2.is_zero():
                forms.append(None)
                break
            try:
                R = resultant_univar(G1, G2, ctx[0], degrees=(e, e))
            except PolynomialError as exc:
                diagnostics.append(f"attempt {attempt}: {exc}")
                forms.append(None)
                break
            forms.append(R)
        if any(R is None or R.is_zero() for R in forms):
            diagnostics.append(f"attempt {attempt}: degenerate target or projection centre")
            continue
        base = gcd_list(forms)
        counts = {R.degree() - base.degree() for R in forms}
        if len(counts) != 1:
            diagnostics.append(f"attempt {attempt}: inconsistent fibre counts {sorted(counts)}")
            continue
        count = counts.pop()
        if count < 1:
            diagnostics.append(f"attempt {attempt}: empty generic fibre")
            continue
        return count
    raise TopologicalDegreeError(
        f"no consistent generic fibre after {max_attempts} attempts: " + "; ".join(diagnostics)
    )
