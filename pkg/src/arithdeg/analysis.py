"""Growth-rate estimation and the conjecture/theorem check harness.

Every number entering a check is a :class:`Quantity` carrying provenance:
``exact`` and ``certified`` values (and ``declared`` user inputs) are
rigorous, ``float-estimate`` values are not.  A check line is "violated"
only when both sides are rigorous and their intervals are separated; a
float-side gap beyond tolerance yields "inconclusive".
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Mapping, Sequence

import numpy as np

from .projective import ProjectivePoint, point_orbit_heights
from .ratmap import RationalMap, TermLimitExceeded, degree_sequence, verify_inverse
from .roots import AlgebraicRadius, certify_dominant_root, to_integer

METHODS = ("root", "ratio", "regression", "recurrence-exact")
RIGOROUS = ("exact", "certified", "declared")
MIN_TERMS = 6
DEFAULT_TOL = 0.05


class PreconditionError(ValueError):
    pass


# ---------------------------------------------------------------- recurrences


@dataclass(frozen=True)
class RecurrenceModel:
    """``a_{n+m} = sum_i c_i a_{n+i}`` reproducing every given term exactly."""

    order: int
    coefficients: tuple  # Fractions c_0..c_{m-1}
    charpoly: tuple  # primitive integer coefficients, lowest degree first
    validated: tuple  # (first, last) indices of terms checked against the model
    held_out: int  # terms beyond the 2m used to solve the system

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "coefficients": [str(c) for c in self.coefficients],
            "charpoly_coefficients": list(self.charpoly),
            "validated": list(self.validated),
            "held_out": self.held_out,
        }


def _solve(M: list, b: list) -> list | None:
    """Exact Gaussian elimination over Q; None when singular."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(M, b)]
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            return None
        A[c], A[piv] = A[piv], A[c]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c] / A[c][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [A[i][n] / A[i][i] for i in range(n)]


def detect_recurrence(seq: Sequence, max_order: int) -> RecurrenceModel | None:
    """Minimal-order exact linear recurrence, validated on every term.

    >>> detect_recurrence([2, 3, 5, 8, 13, 21, 34, 55], 3).coefficients
    (Fraction(1, 1), Fraction(1, 1))
    """
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    if len(seq) < 2 * max_order + 2:
        raise ValueError(f"need at least {2 * max_order + 2} terms for max_order {max_order}")
    a = [Fraction(x) for x in seq]
    L = len(a)
    for m in range(1, max_order + 1):
        H = [[a[n + i] for i in range(m)] for n in range(m)]
        c = _solve(H, [a[n + m] for n in range(m)])
        if c is None:
            continue
        if all(a[n + m] == sum(ci * a[n + i] for i, ci in enumerate(c)) for n in range(L - m)):
            char = to_integer([-ci for ci in c] + [Fraction(1)])
            return RecurrenceModel(m, tuple(c), tuple(char), (0, L - 1), L - 2 * m)
    return None


def dominant_root(model: RecurrenceModel, tol: float = 1e-10) -> AlgebraicRadius:
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    return certify_dominant_root(model.charpoly, tol)


# ---------------------------------------------------------------- estimation


@dataclass(frozen=True)
class GrowthEstimate:
    value: float
    method: str
    window: tuple
    residual: float
    certified: bool = False
    stability: float | None = None
    radius: AlgebraicRadius | None = None
    model: RecurrenceModel | None = None
    terms: int = 0
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "method": self.method,
            "window": list(self.window),
            "residual": self.residual,
            "certified": self.certified,
            "stability": self.stability,
            "terms": self.terms,
            "radius": None if self.radius is None else self.radius.to_dict(),
            "recurrence": None if self.model is None else self.model.to_dict(),
            "note": self.note,
        }


def lift(values: Sequence[float]) -> list:
    """``h+ = max(h, 1)`` applied termwise."""
    return [max(float(v), 1.0) for v in values]


def _float_estimate(a: list, method: str, start: int) -> tuple:
    L = len(a)
    if method == "root":
        # n-th root normalized by the first term, so c * r^n gives r exactly
        v = (a[-1] / a[0]) ** (1.0 / (L - 1))
        prev = (a[-2] / a[0]) ** (1.0 / (L - 2))
        return v, (start, start + L - 1), abs(v - prev)
    logs = [math.log(x) for x in a]
    if method == "ratio":
        m = max(1, -(-(L - 1) // 2))
        ratios = [logs[i + 1] - logs[i] for i in range(L - 1 - m, L - 1)]
        v = math.exp((logs[-1] - logs[L - 1 - m]) / m)
        res = math.exp(max(ratios)) - math.exp(min(ratios))
        return v, (start + L - 1 - m, start + L - 1), res
    if method == "regression":
        m = min(L, max(3, -(-L // 2)))
        ns = np.arange(start + L - m, start + L, dtype=float)
        ys = np.array(logs[L - m :])
        slope, icept = np.polyfit(ns, ys, 1)
        rms = float(np.sqrt(np.mean((ys - (slope * ns + icept)) ** 2)))
        return math.exp(float(slope)), (int(ns[0]), int(ns[-1])), rms
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def estimate_growth(
    seq: Sequence, method: str = "ratio", start: int = 1, tol: float = 1e-10
) -> GrowthEstimate:
    """Estimate ``lim a_n^(1/n)`` from terms ``a_start, a_start+1, ...``.

    Entries in ``(0, 1)`` are lifted to 1.  ``recurrence-exact`` needs exact
    integer or rational input and certifies the dominant root when the
    detected recurrence allows; without a recurrence it falls back to ratio.

    >>> estimate_growth([2, 4, 8, 16, 32]).value
    2.0
    """
    if method == "recurrence":
        method = "recurrence-exact"
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if len(seq) < 3:
        raise ValueError("need at least 3 terms")
    if any(not (x > 0) for x in seq):
        raise ValueError("entries must be positive")
    L = len(seq)
    if method == "recurrence-exact":
        if not all(isinstance(x, (int, Rational)) for x in seq):
            raise ValueError("recurrence-exact needs exact integer or rational terms")
        exact = [max(Fraction(x), Fraction(1)) for x in seq]
        max_order = min(6, (L - 2) // 2)
        model = detect_recurrence(exact, max_order) if max_order >= 1 else None
        if model is not None:
            rad = dominant_root(model, tol)
            return GrowthEstimate(
                rad.value, method, (start, start + L - 1), 0.0, rad.certified, 0.0, rad, model, L,
                "" if rad.certified else rad.note,
            )
        fallback = estimate_growth(seq, "ratio", start)
        return GrowthEstimate(
            fallback.value, "ratio", fallback.window, fallback.residual, False, fallback.stability,
            terms=L, note="no exact recurrence found; ratio estimate",
        )
    a = lift(seq)
    value, window, residual = _float_estimate(a, method, start)
    windows = [_float_estimate(a[:k], method, start)[0] for k in range(L, max(L - 3, 2), -1)]
    stability = max(windows) - min(windows) if len(windows) > 1 else None
    return GrowthEstimate(value, method, window, residual, False, stability, terms=L)


def estimate_height_growth(
    degrees: Sequence[int], logcoeffs: Sequence[float], start: int = 1
) -> GrowthEstimate:
    """Growth of ``deg + log c`` as the larger growth of its two parts.

    For nonnegative sequences ``(a_n + b_n)^(1/n)`` has limsup equal to the
    larger of the two limsups; estimating each part separately avoids the
    slow mixing of two geometric rates in the sum.
    """
    deg = estimate_growth(list(degrees), "recurrence-exact", start)
    coef = estimate_growth(lift(logcoeffs), "ratio", start)
    coef_trivial = all(c <= 1.0 for c in lift(logcoeffs)) and all(x == 0 for x in logcoeffs)
    if coef_trivial:
        return GrowthEstimate(
            deg.value, deg.method, deg.window, deg.residual, deg.certified, deg.stability,
            deg.radius, deg.model, deg.terms, "coefficients constant; degree part decides",
        )
    best = deg if deg.value >= coef.value else coef
    return GrowthEstimate(
        max(deg.value, coef.value), best.method, best.window, best.residual, False,
        best.stability, None, None, len(degrees),
        f"max of degree growth {deg.value:.6g} ({deg.method}) and coefficient growth {coef.value:.6g} (ratio)",
    )


# ---------------------------------------------------------------- quantities


@dataclass(frozen=True)
class Quantity:
    """A number with provenance and, for rigorous values, an enclosure."""

    value: float
    provenance: str
    label: str = ""
    lo: float | None = None
    hi: float | None = None
    terms: int | None = None

    def __post_init__(self):
        if self.provenance not in RIGOROUS + ("float-estimate", "unavailable"):
            raise ValueError(f"unknown provenance {self.provenance!r}")
        if self.lo is None:
            object.__setattr__(self, "lo", float(self.value))
        if self.hi is None:
            object.__setattr__(self, "hi", float(self.value))

    @property
    def rigorous(self) -> bool:
        return self.provenance in RIGOROUS

    @classmethod
    def exact(cls, value, label: str = "") -> "Quantity":
        return cls(float(value), "exact", label)

    @classmethod
    def from_radius(cls, r: AlgebraicRadius, label: str = "") -> "Quantity":
        if r.certified:
            lo, hi = r.interval
            return cls(r.value, "certified", label, float(lo), float(hi))
        return cls(r.value, "float-estimate", label)

    @classmethod
    def from_estimate(cls, g: GrowthEstimate, label: str = "") -> "Quantity":
        if g.certified and g.radius is not None:
            q = cls.from_radius(g.radius, label)
            return cls(q.value, q.provenance, label, q.lo, q.hi, g.terms)
        return cls(g.value, "float-estimate", label, terms=g.terms)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "value": self.value,
            "provenance": self.provenance,
            "interval": [self.lo, self.hi],
            "terms": self.terms,
        }


def as_quantity(x, label: str = "") -> Quantity:
    if isinstance(x, Quantity):
        return x if x.label or not label else Quantity(x.value, x.provenance, label, x.lo, x.hi, x.terms)
    if isinstance(x, AlgebraicRadius):
        return Quantity.from_radius(x, label)
    if isinstance(x, GrowthEstimate):
        return Quantity.from_estimate(x, label)
    return Quantity(float(x), "declared", label)


def _combine_prov(*qs: Quantity) -> str:
    provs = {q.provenance for q in qs}
    if len(provs) == 1 and provs <= set(RIGOROUS):
        return provs.pop()
    if all(q.rigorous for q in qs):
        return "certified"
    return "float-estimate"


def _min_terms(*qs: Quantity) -> int | None:
    ts = [q.terms for q in qs if q.terms is not None]
    return min(ts) if ts else None


def q_max(a: Quantity, b: Quantity, label: str = "") -> Quantity:
    return Quantity(max(a.value, b.value), _combine_prov(a, b), label, max(a.lo, b.lo), max(a.hi, b.hi),
                    _min_terms(a, b))


def q_mul(a: Quantity, b: Quantity, label: str = "") -> Quantity:
    # enclosures of nonnegative values
    return Quantity(a.value * b.value, _combine_prov(a, b), label, a.lo * b.lo, a.hi * b.hi, _min_terms(a, b))


def q_pow(a: Quantity, k: int, label: str = "") -> Quantity:
    return Quantity(a.value**k, _combine_prov(a), label, a.lo**k, a.hi**k, a.terms)


# ---------------------------------------------------------------- reports


@dataclass(frozen=True)
class CheckLine:
    statement: str
    relation: str
    lhs: Quantity
    rhs: Quantity
    verdict: str
    gap: float
    tolerance: float | None
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "statement": self.statement,
            "relation": self.relation,
            "lhs": self.lhs.to_dict(),
            "rhs": self.rhs.to_dict(),
            "verdict": self.verdict,
            "gap": self.gap,
            "tolerance": self.tolerance,
            "note": self.note,
        }


def compare(statement: str, lhs: Quantity, rhs: Quantity, relation: str, tol: float) -> CheckLine:
    """Judge ``lhs <relation> rhs`` for relation ``==``, ``>=`` or ``<=``.

    Rigorous pairs are compared by enclosure overlap (zero tolerance, a
    rounding slack only) and may be violated.  Otherwise the relative gap is
    compared to ``tol``; exceeding it gives "inconclusive".
    """
    if relation not in ("==", ">=", "<="):
        raise ValueError(f"unknown relation {relation!r}")
    if "unavailable" in (lhs.provenance, rhs.provenance):
        return CheckLine(statement, relation, lhs, rhs, "inconclusive", math.nan, None, "input unavailable")
    scale = max(abs(rhs.value), 1.0)
    if lhs.rigorous and rhs.rigorous:
        slack = 1e-12 * max(1.0, abs(lhs.value), abs(rhs.value))
        if relation == "==":
            raw = max(0.0, lhs.lo - rhs.hi, rhs.lo - lhs.hi)
        elif relation == ">=":
            raw = max(0.0, rhs.lo - lhs.hi)
        else:
            raw = max(0.0, lhs.lo - rhs.hi)
        gap = raw / scale
        verdict = "consistent" if raw <= slack else "violated"
        return CheckLine(statement, relation, lhs, rhs, verdict, gap, 0.0)
    if relation == "==":
        raw = abs(lhs.value - rhs.value)
    elif relation == ">=":
        raw = max(0.0, rhs.value - lhs.value)
    else:
        raw = max(0.0, lhs.value - rhs.value)
    gap = raw / scale
    terms = _min_terms(lhs, rhs)
    if terms is not None and terms < MIN_TERMS:
        return CheckLine(statement, relation, lhs, rhs, "inconclusive", gap, tol,
                         f"only {terms} terms; at least {MIN_TERMS} required")
    verdict = "consistent" if gap <= tol else "inconclusive"
    note = "" if verdict == "consistent" else "float estimate outside tolerance; not a certified violation"
    return CheckLine(statement, relation, lhs, rhs, verdict, gap, tol, note)


@dataclass
class ConjectureReport:
    claim: str
    surrogate: str = ""
    window: tuple | None = None
    tolerance: float = DEFAULT_TOL
    lines: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def verdict(self) -> str:
        verdicts = {ln.verdict for ln in self.lines}
        if "violated" in verdicts:
            return "violated"
        if not self.lines or "inconclusive" in verdicts:
            return "inconclusive"
        return "consistent"

    @property
    def gap(self) -> float:
        gaps = [ln.gap for ln in self.lines if not math.isnan(ln.gap)]
        return max(gaps) if gaps else 0.0

    def add(self, statement: str, lhs: Quantity, rhs: Quantity, relation: str) -> CheckLine:
        line = compare(statement, lhs, rhs, relation, self.tolerance)
        self.lines.append(line)
        return line

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "verdict": self.verdict,
            "lhs": [ln.lhs.to_dict() for ln in self.lines],
            "rhs": [ln.rhs.to_dict() for ln in self.lines],
            "gap": self.gap,
            "tolerance": self.tolerance,
            "surrogate": self.surrogate,
            "window": None if self.window is None else list(self.window),
            "lines": [ln.to_dict() for ln in self.lines],
            "notes": list(self.notes),
        }


def _add_derived_bound(report: ConjectureReport, alphas: Mapping[int, Quantity], lambda1) -> None:
    """Every alpha_k surrogate must respect alpha_k <= lambda_1^k."""
    if lambda1 is None:
        report.notes.append("derived bound alpha_k <= lambda_1^k not evaluated: lambda_1 not supplied")
        return
    lam1 = as_quantity(lambda1, "lambda_1")
    for k, a in sorted(alphas.items()):
        if k >= 1:
            report.add(f"alpha_{k} <= lambda_1^{k}", a, q_pow(lam1, k, f"lambda_1^{k}"), "<=")


def _surrogate_text(alphas: Mapping[int, Quantity]) -> str:
    return "; ".join(f"alpha_{k}: {a.label or a.provenance}" for k, a in sorted(alphas.items()))


def check_product_formula(
    lambdas: Sequence, alpha_surrogates: Mapping[int, object], tol: float = DEFAULT_TOL
) -> ConjectureReport:
    """``alpha_k = max(lambda_k, lambda_{k-1})`` plus the one-sided lower bound."""
    lams = [as_quantity(x, f"lambda_{k}") for k, x in enumerate(lambdas)]
    d = len(lams) - 1
    alphas = {int(k): as_quantity(v, f"alpha_{k}") for k, v in alpha_surrogates.items()}
    bad = [k for k in alphas if not 1 <= k <= d]
    if bad:
        raise ValueError(f"alpha indices {bad} outside 1..{d}")
    rep = ConjectureReport("product-formula", _surrogate_text(alphas), tolerance=tol)
    for k, a in sorted(alphas.items()):
        target = q_max(lams[k], lams[k - 1], f"max(lambda_{k}, lambda_{k - 1})")
        rep.add(f"alpha_{k} = max(lambda_{k}, lambda_{k - 1})", a, target, "==")
        rep.add(f"alpha_{k} >= max(lambda_{k}, lambda_{k - 1})", a, target, ">=")
    _add_derived_bound(rep, alphas, lams[1] if d >= 1 else None)
    return rep


def check_log_concavity(values: Sequence, tol: float = DEFAULT_TOL, lambda1=None,
                        name: str = "alpha") -> ConjectureReport:
    """``v_k^2 >= v_{k-1} v_{k+1}`` at every interior index."""
    if len(values) < 3:
        raise ValueError("log-concavity needs at least 3 values")
    vs = [as_quantity(x, f"{name}_{k}") for k, x in enumerate(values)]
    rep = ConjectureReport("log-concavity", ", ".join(v.label for v in vs), tolerance=tol)
    for k in range(1, len(vs) - 1):
        rep.add(
            f"{name}_{k}^2 >= {name}_{k - 1} * {name}_{k + 1}",
            q_mul(vs[k], vs[k], f"{name}_{k}^2"),
            q_mul(vs[k - 1], vs[k + 1], f"{name}_{k - 1}*{name}_{k + 1}"),
            ">=",
        )
    if name == "alpha":
        _add_derived_bound(rep, {k: v for k, v in enumerate(vs) if 1 <= k}, lambda1)
    return rep


def check_birational_duality(
    f: RationalMap,
    f_inv: RationalMap,
    alpha_f: Mapping[int, object],
    alpha_finv: Mapping[int, object],
    tol: float = DEFAULT_TOL,
    lambda1=None,
) -> ConjectureReport:
    """``alpha_k(f) = alpha_{d+1-k}(f^-1)`` for a verified inverse pair."""
    if not verify_inverse(f, f_inv):
        raise PreconditionError("the supplied maps are not mutually inverse")
    d = f.dim
    af = {int(k): as_quantity(v, f"alpha_{k}(f)") for k, v in alpha_f.items()}
    ag = {int(k): as_quantity(v, f"alpha_{k}(f^-1)") for k, v in alpha_finv.items()}
    rep = ConjectureReport("birational-duality", _surrogate_text(af) + " | " + _surrogate_text(ag), tolerance=tol)
    for k, a in sorted(af.items()):
        j = d + 1 - k
        if j in ag:
            rep.add(f"alpha_{k}(f) = alpha_{j}(f^-1)", a, ag[j], "==")
    if not rep.lines:
        rep.notes.append("no index pair k, d+1-k has surrogates on both sides")
    _add_derived_bound(rep, af, lambda1)
    return rep


def degree_growth(f: RationalMap, N: int, tol: float = 1e-10) -> tuple:
    """``(Quantity, GrowthEstimate)`` for lambda_1 from the exact degree sequence."""
    try:
        degs = degree_sequence(f, N).degrees
    except TermLimitExceeded as exc:
        degs = exc.partial.degrees
    if len(degs) < 3:
        return Quantity(math.nan, "unavailable", "lambda_1"), None
    est = estimate_growth(degs, "recurrence-exact", 1, tol)
    return Quantity.from_estimate(est, "lambda_1 (degree sequence)"), est


def point_growth(f: RationalMap, P: ProjectivePoint, N: int) -> tuple:
    """``(Quantity, GrowthEstimate | None, orbit)`` for the lifted point heights."""
    orbit = point_orbit_heights(f, P, N)
    hs = lift(orbit.heights())
    if len(hs) < 3:
        return Quantity(math.nan, "unavailable", "alpha_1 (point heights)"), None, orbit
    est = estimate_growth(hs, "ratio", start=0)
    return Quantity.from_estimate(est, f"alpha_1 (point heights of {P})"), est, orbit


def check_ks_point(
    f: RationalMap, P: ProjectivePoint, N: int, tol: float = DEFAULT_TOL, lambda1=None,
    degree_horizon: int = 10,
) -> ConjectureReport:
    """Point height growth against lambda_1.

    A preperiodic orbit is not Zariski dense, so only ``alpha <= lambda_1``
    is tested for it.
    """
    rep = ConjectureReport("ks-point", tolerance=tol)
    alpha, est, orbit = point_growth(f, P, N)
    if lambda1 is None:
        lam, _ = degree_growth(f, min(N, degree_horizon))
    else:
        lam = as_quantity(lambda1, "lambda_1")
    rep.surrogate = alpha.label
    if est is not None:
        rep.window = est.window
    if orbit.truncated:
        rep.notes.append(f"orbit stopped early: {orbit.stop_reason}")
    if len(orbit) < MIN_TERMS or est is None:
        rep.notes.append(f"orbit has {len(orbit)} terms; at least {MIN_TERMS} required")
        rep.lines.append(CheckLine("alpha_1(P) = lambda_1", "==", alpha, lam, "inconclusive", math.nan, tol,
                                   "orbit too short"))
        return rep
    if orbit.is_preperiodic():
        rep.notes.append("orbit is preperiodic, hence not dense; only alpha_1(P) <= lambda_1 is tested")
        rep.add("alpha_1(P) <= lambda_1", alpha, lam, "<=")
    else:
        rep.add("alpha_1(P) = lambda_1", alpha, lam, "==")
    return rep


def check_polarized(q: int, lambdas: Sequence, alpha_surrogates: Mapping[int, object],
                    tol: float = DEFAULT_TOL) -> ConjectureReport:
    """For a map declared polarized with multiplier q: ``lambda_k = alpha_k = q^k``."""
    if q < 1:
        raise ValueError("polarization multiplier must be a positive integer")
    rep = ConjectureReport("polarized", f"declared multiplier q={q}", tolerance=tol)
    lams = [as_quantity(x, f"lambda_{k}") for k, x in enumerate(lambdas)]
    for k, lam in enumerate(lams):
        rep.add(f"lambda_{k} = q^{k}", lam, Quantity.exact(q**k, f"{q}^{k}"), "==")
    alphas = {int(k): as_quantity(v, f"alpha_{k}") for k, v in alpha_surrogates.items()}
    for k, a in sorted(alphas.items()):
        rep.add(f"alpha_{k} = q^{k}", a, Quantity.exact(q**k, f"{q}^{k}"), "==")
    rep.surrogate += "; " + _surrogate_text(alphas)
    _add_derived_bound(rep, alphas, lams[1] if len(lams) > 1 else None)
    return rep


def check_cycle_consistency(estimates: Sequence[Quantity], k: int, tol: float = DEFAULT_TOL,
                            lambda1=None) -> ConjectureReport:
    """Different cycles of one dimension should share one growth rate.

    The model-level quantity on the other side of the cycle bound is not
    computable here, so only cycle-to-cycle agreement is tested.
    """
    rep = ConjectureReport("cycle-consistency", ", ".join(e.label for e in estimates), tolerance=tol)
    rep.notes.append(f"alpha_{k}(f; V) compared across cycles only; alpha_{k}(f) itself is not computed")
    for a, b in zip(estimates, estimates[1:]):
        rep.add(f"{a.label} = {b.label}", a, b, "==")
    if lambda1 is None:
        rep.notes.append("derived bound alpha_k <= lambda_1^k not evaluated: lambda_1 not supplied")
    else:
        bound = q_pow(as_quantity(lambda1, "lambda_1"), k, f"lambda_1^{k}")
        for e in estimates:
            rep.add(f"{e.label} <= lambda_1^{k}", e, bound, "<=")
    return rep
