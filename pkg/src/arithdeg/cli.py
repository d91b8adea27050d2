"""Command-line driver: experiment-spec files in, CSV/JSON tables out.

Exit codes: 0 success (inconclusive checks included), 2 spec validation
error, 3 computation failure, 4 at least one check violated.
"""
from __future__ import annotations

import argparse
import csv
import datetime as _dt
import hashlib
import io
import json
import math
import os
import re
import sys
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from . import __version__
from .analysis import (
    DEFAULT_TOL,
    ConjectureReport,
    Quantity,
    check_birational_duality,
    check_cycle_consistency,
    check_ks_point,
    check_log_concavity,
    check_polarized,
    check_product_formula,
    degree_growth,
    estimate_growth,
    estimate_height_growth,
    lift,
    point_growth,
)
from .cycles import CycleError, Hypersurface, ParamCurve, curve_orbit_heights, parametrize_line
from .monomial import MonomialError, MonomialMap, dynamical_degrees, monomial_inverse, parse_monomial, to_rational_map
from .poly import PolynomialError
from .projective import PointError, point_orbit_heights, parse_point
from .ratmap import (
    MapError,
    RationalMap,
    TermLimitExceeded,
    TopologicalDegreeError,
    degree_sequence,
    parse_map_file,
    topological_degree_dim2,
    verify_inverse,
)
from .roots import AlgebraicRadius

EXIT_OK, EXIT_VALIDATION, EXIT_COMPUTATION, EXIT_VIOLATED = 0, 2, 3, 4
SECTIONS = ("map", "inverse", "points", "cycles", "checks", "options")
CHECKS = ("product-formula", "log-concavity", "ks-point", "duality", "polarized", "cycle-consistency")
STRATEGIES = ("auto", "param", "inverse-pullback")
ROOT_TOL = 1e-12


class SpecError(ValueError):
    """Invalid experiment spec (exit code 2)."""


class ComputationError(RuntimeError):
    """A requested computation failed (exit code 3)."""


# ---------------------------------------------------------------- spec


@dataclass
class CycleSpec:
    kind: str  # "hypersurface" or "curve"
    text: str
    obj: object


@dataclass
class CheckSpec:
    name: str
    params: dict = field(default_factory=dict)


@dataclass
class ExperimentSpec:
    text: str
    map: RationalMap | None = None
    map_source: str = ""
    monomial: MonomialMap | None = None
    inverse: RationalMap | None = None
    points: list = field(default_factory=list)
    cycles: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    horizon: int = 10
    cycle_horizon: int | None = None
    degree_horizon: int | None = None
    seed: int | None = None
    tol: float = DEFAULT_TOL
    strategy: str = "auto"
    term_limit: int = 10**6

    def effective_options(self) -> dict:
        return {
            "horizon": self.horizon,
            "cycle_horizon": self.cycle_horizon,
            "degree_horizon": self.degree_horizon,
            "seed": self.seed,
            "tol": self.tol,
            "strategy": self.strategy,
            "term_limit": self.term_limit,
        }

    def digest(self) -> str:
        payload = self.text + "\n" + json.dumps(self.effective_options(), sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()

    def validate(self) -> None:
        if self.horizon < 1:
            raise SpecError("horizon must be at least 1")
        for name in ("cycle_horizon", "degree_horizon"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise SpecError(f"{name} must be at least 1")
        if self.tol <= 0:
            raise SpecError("tolerance must be positive")
        if self.strategy not in STRATEGIES:
            raise SpecError(f"strategy must be one of {STRATEGIES}")
        if self.strategy == "inverse-pullback" and self.inverse is None and self.cycles:
            raise SpecError("strategy inverse-pullback needs an [inverse] section")
        for chk in self.checks:
            if chk.name == "polarized" and "q" not in chk.params:
                raise SpecError("check 'polarized' needs a multiplier, e.g. 'polarized q=2'")


_HEADER = re.compile(r"^\[([a-z]+)\]$")


def _sections(text: str) -> dict:
    out: dict = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _HEADER.match(line)
        if m:
            current = m.group(1)
            if current not in SECTIONS:
                raise SpecError(f"line {lineno}: unknown section [{current}]")
            if current in out:
                raise SpecError(f"line {lineno}: duplicate section [{current}]")
            out[current] = []
            continue
        if current is None:
            raise SpecError(f"line {lineno}: content before the first section header")
        out[current].append((lineno, line))
    return out


def _map_block(lines: list, base: Path, what: str) -> tuple:
    """Returns ``(RationalMap, MonomialMap | None, source)``."""
    if not lines:
        raise SpecError(f"[{what}] section is empty")
    first = lines[0][1]
    m = re.match(r"^file\s*=\s*(.+)$", first)
    if m:
        path = (base / m.group(1).strip()).resolve()
        if not path.is_file():
            raise SpecError(f"[{what}] file {path} does not exist")
        body = [(i + 1, ln.split("#", 1)[0].strip()) for i, ln in enumerate(path.read_text().splitlines())]
        rf, mono, _ = _map_block([x for x in body if x[1]], base, what)
        return rf, mono, f"file {path.name}"
    if re.match(r"^A\s*=", first):
        mono = parse_monomial(" ".join(ln for _, ln in lines))
        return to_rational_map(mono), mono, "monomial"
    return parse_map_file("\n".join(ln for _, ln in lines)), None, "inline"


def parse_spec(text: str, base_dir: str | Path = ".") -> ExperimentSpec:
    """Parse the sectioned experiment-spec format documented in the README."""
    base = Path(base_dir)
    secs = _sections(text)
    spec = ExperimentSpec(text=text)
    try:
        if "map" in secs:
            spec.map, spec.monomial, spec.map_source = _map_block(secs["map"], base, "map")
        if "inverse" in secs:
            if len(secs["inverse"]) == 1 and secs["inverse"][0][1] == "auto":
                if spec.monomial is None:
                    raise SpecError("[inverse] auto needs monomial map data")
                spec.inverse = to_rational_map(monomial_inverse(spec.monomial), spec.map.variables)
            else:
                spec.inverse, _, _ = _map_block(secs["inverse"], base, "inverse")
        for lineno, line in secs.get("points", []):
            spec.points.append(parse_point(line))
        variables = spec.map.variables if spec.map else None
        for lineno, line in secs.get("cycles", []):
            kind, _, body = line.partition(":")
            kind, body = kind.strip(), body.strip()
            if variables is None:
                raise SpecError("[cycles] needs a [map] section")
            if kind == "hypersurface":
                spec.cycles.append(CycleSpec(kind, body, Hypersurface.parse(body, variables)))
            elif kind == "curve":
                spec.cycles.append(CycleSpec(kind, body, ParamCurve.parse([t.strip() for t in body.split(",")])))
            else:
                raise SpecError(f"line {lineno}: cycle kind must be 'hypersurface' or 'curve'")
        for lineno, line in secs.get("checks", []):
            name, *rest = line.split()
            if name not in CHECKS:
                raise SpecError(f"line {lineno}: unknown check {name!r}; expected one of {CHECKS}")
            params = {}
            for item in rest:
                k, eq, v = item.partition("=")
                if not eq:
                    raise SpecError(f"line {lineno}: malformed parameter {item!r}")
                params[k] = int(v)
            spec.checks.append(CheckSpec(name, params))
        for lineno, line in secs.get("options", []):
            k, eq, v = line.partition("=")
            k, v = k.strip(), v.strip()
            if not eq:
                raise SpecError(f"line {lineno}: options are 'key = value'")
            if k in ("horizon", "cycle_horizon", "degree_horizon", "seed", "term_limit"):
                setattr(spec, k, int(v))
            elif k == "tol":
                spec.tol = float(v)
            elif k == "strategy":
                spec.strategy = v
            else:
                raise SpecError(f"line {lineno}: unknown option {k!r}")
    except (MapError, MonomialError, PolynomialError, PointError, CycleError) as exc:
        raise SpecError(str(exc)) from exc
    except ValueError as exc:
        if isinstance(exc, SpecError):
            raise
        raise SpecError(str(exc)) from exc
    if spec.map is not None:
        for P in spec.points:
            if P.dim != spec.map.dim:
                raise SpecError(f"point {P} does not lie in P^{spec.map.dim}")
        for c in spec.cycles:
            if isinstance(c.obj, ParamCurve) and c.obj.dim != spec.map.dim:
                raise SpecError(f"curve {c.text} does not lie in P^{spec.map.dim}")
    spec.validate()
    return spec


def load_spec(path: str | Path) -> ExperimentSpec:
    p = Path(path)
    if not p.is_file():
        raise SpecError(f"spec file {p} does not exist")
    return parse_spec(p.read_text(), p.parent)


# ---------------------------------------------------------------- output


def _clean(obj):
    """Replace non-finite floats by None so the JSON stays standard."""
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


class Run:
    """Output directory, written files and task statuses of one invocation."""

    def __init__(self, out: str | Path, command: str, spec: ExperimentSpec | None):
        self.out = Path(out)
        self.out.mkdir(parents=True, exist_ok=True)
        self.command = command
        self.spec = spec
        self.outputs: dict = {}
        self.tasks: list = []
        self.started = _dt.datetime.now(_dt.timezone.utc).isoformat()

    def _write(self, name: str, data: bytes) -> None:
        target = self.out / name
        target.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=".tmp-")
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, target)
        self.outputs[name] = {"path": name, "sha256": hashlib.sha256(data).hexdigest(), "bytes": len(data)}

    def write_json(self, name: str, obj) -> None:
        text = json.dumps(_clean(obj), indent=2, ensure_ascii=False) + "\n"
        self._write(name, text.encode("utf-8"))

    def write_csv(self, name: str, header: Sequence[str], rows) -> None:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow(header)
        for row in rows:
            w.writerow(["" if x is None else (repr(x) if isinstance(x, float) else x) for x in row])
        self._write(name, buf.getvalue().encode("utf-8"))

    def task(self, name: str, status: str, detail: str = "") -> None:
        self.tasks.append({"task": name, "status": status, "detail": detail})

    def manifest(self) -> dict:
        return {
            "tool": "arithdeg",
            "version": __version__,
            "command": self.command,
            "spec_digest": self.spec.digest() if self.spec else None,
            "options": self.spec.effective_options() if self.spec else None,
            "started": self.started,
            "finished": _dt.datetime.now(_dt.timezone.utc).isoformat(),
            "tasks": self.tasks,
            "outputs": [self.outputs[k] for k in sorted(self.outputs)],
        }

    def _carry_over(self) -> None:
        """Keep inventory entries of earlier commands whose files are unchanged."""
        path = self.out / "manifest.json"
        if not path.is_file():
            return
        try:
            old = json.loads(path.read_text())
        except ValueError:
            return
        kept = []
        for entry in old.get("outputs", []):
            name = entry.get("path", "")
            f = self.out / name
            if name in self.outputs or not f.is_file():
                continue
            if hashlib.sha256(f.read_bytes()).hexdigest() == entry.get("sha256"):
                self.outputs[name] = entry
                kept.append(name)
        if kept:
            done = {t["task"] for t in self.tasks}
            self.tasks = [t for t in old.get("tasks", []) if t.get("task") not in done] + self.tasks

    def finish(self) -> None:
        self._carry_over()
        text = json.dumps(_clean(self.manifest()), indent=2) + "\n"
        (self.out / "manifest.json").write_text(text, encoding="utf-8")


def _radius_row(k: int, r: AlgebraicRadius) -> list:
    prov = "certified" if r.certified else "float-estimate"
    lo, hi = (str(r.interval[0]), str(r.interval[1])) if r.interval else ("", "")
    return [k, r.value, prov, lo, hi, r.charpoly_str()]


# ---------------------------------------------------------------- commands


def _need_map(spec: ExperimentSpec) -> RationalMap:
    if spec.map is None:
        raise SpecError("this command needs a [map] section")
    return spec.map


def cmd_degrees(spec: ExperimentSpec, run: Run) -> int:
    f = _need_map(spec)
    N = spec.degree_horizon or spec.horizon
    reason = None
    try:
        seq = degree_sequence(f, N, max_terms=spec.term_limit)
    except TermLimitExceeded as exc:
        seq, reason = exc.partial, str(exc)
    run.write_csv("degrees.csv", ["n", "degree", "provenance"], [[n, d, "exact"] for n, d in seq.values])
    degs = seq.degrees
    growth = estimate_growth(degs, "recurrence-exact") if len(degs) >= 3 else None
    topdeg = None
    if f.dim == 2 and spec.seed is not None:
        try:
            topdeg = {"value": topological_degree_dim2(f, spec.seed), "provenance": "exact", "seed": spec.seed}
        except TopologicalDegreeError as exc:
            raise ComputationError(str(exc)) from exc
    run.write_json("degrees_growth.json", {
        "map": str(f),
        "horizon": N,
        "degrees": degs,
        "growth": None if growth is None else growth.to_dict(),
        "topological_degree": topdeg,
        "truncated": reason,
    })
    run.task("degrees", "partial" if reason else "ok", reason or "")
    print(f"degrees n=1..{len(degs)}: {' '.join(map(str, degs))}")
    if growth is not None:
        tag = "certified" if growth.certified else "uncertified"
        print(f"lambda_1 estimate {growth.value:.10g} ({growth.method}, {tag})")
    if topdeg is not None:
        print(f"topological degree {topdeg['value']}")
    return EXIT_OK


def _resolve_strategy(spec: ExperimentSpec, c: CycleSpec, f: RationalMap, inverse: RationalMap | None) -> tuple:
    """``(strategy, source)`` for pushing cycle ``c`` forward by ``f``."""
    strategy = spec.strategy
    if strategy == "auto":
        strategy = "inverse-pullback" if (c.kind == "hypersurface" and inverse is not None) else "param"
    if strategy == "inverse-pullback":
        if c.kind != "hypersurface":
            raise SpecError(f"inverse-pullback needs a hypersurface, got curve {c.text}")
        if inverse is None:
            raise SpecError("inverse-pullback needs the inverse map")
        return strategy, c.obj
    if c.kind == "curve":
        return strategy, c.obj
    try:
        return strategy, parametrize_line(c.obj)
    except CycleError as exc:
        raise SpecError(f"param strategy: {exc}; give a parametrized curve instead") from exc


def _cycle_orbit(spec: ExperimentSpec, c: CycleSpec, f: RationalMap, inverse: RationalMap | None):
    strategy, source = _resolve_strategy(spec, c, f, inverse)
    N = spec.cycle_horizon or spec.horizon
    try:
        rows = curve_orbit_heights(f, source, N, strategy, inverse)
    except CycleError as exc:
        raise ComputationError(f"cycle {c.text}: {exc}") from exc
    return strategy, rows


def _cycle_growth(rows) -> object:
    if len(rows) < 3:
        return None
    return estimate_height_growth([r.degree for r in rows], [r.logmaxcoeff for r in rows], start=rows[0].n)


def cmd_orbit(spec: ExperimentSpec, run: Run) -> int:
    f = _need_map(spec)
    if not spec.points and not spec.cycles:
        raise SpecError("orbit needs at least one point or cycle")
    summary = {"points": [], "cycles": []}
    for i, P in enumerate(spec.points, 1):
        orbit = point_orbit_heights(f, P, spec.horizon)
        run.write_csv(f"point_{i}.csv", ["n", "point", "height", "provenance"],
                      [[r.n, str(r.point), r.height, "exact"] for r in orbit])
        est = estimate_growth(lift(orbit.heights()), "ratio", start=0) if len(orbit) >= 3 else None
        summary["points"].append({
            "index": i, "point": str(P), "terms": len(orbit), "preperiodic": orbit.is_preperiodic(),
            "stop_reason": orbit.stop_reason, "growth": None if est is None else est.to_dict(),
            "growth_provenance": "float-estimate",
        })
        run.task(f"point_{i}", "partial" if orbit.truncated else "ok", orbit.stop_reason or "")
        if est is not None:
            print(f"point {P}: {len(orbit)} terms, growth {est.value:.6g}")
    for i, c in enumerate(spec.cycles, 1):
        strategy, rows = _cycle_orbit(spec, c, f, spec.inverse)
        run.write_csv(
            f"cycle_{i}.csv",
            ["n", "degree", "logmaxcoeff", "height", "multiplicity", "provenance", "equation"],
            [[r.n, r.degree, r.logmaxcoeff, r.height, r.multiplicity, "exact",
              str(r.cycle.parts[0][0])] for r in rows],
        )
        est = _cycle_growth(rows)
        summary["cycles"].append({
            "index": i, "cycle": c.text, "strategy": strategy, "terms": len(rows),
            "stop_reason": rows.stop_reason, "growth": None if est is None else est.to_dict(),
            "growth_provenance": None if est is None else Quantity.from_estimate(est).provenance,
        })
        run.task(f"cycle_{i}", "partial" if rows.truncated else "ok", rows.stop_reason or "")
        print(f"cycle {c.text} ({strategy}): degrees {' '.join(str(r.degree) for r in rows)}")
    run.write_json("orbit_growth.json", summary)
    return EXIT_OK


def cmd_monomial(spec: ExperimentSpec, run: Run) -> int:
    M = spec.monomial
    if M is None:
        raise SpecError("monomial needs monomial map data 'A = [[..]]; c = (..)' in [map]")
    lams = dynamical_degrees(M, ROOT_TOL)
    try:
        inverse = str(monomial_inverse(M))
    except MonomialError:
        inverse = None
    run.write_json("monomial.json", {
        "map": str(M),
        "rational_map": str(to_rational_map(M)),
        "inverse": inverse,
        "lambdas": [dict(k=k, **r.to_dict()) for k, r in enumerate(lams)],
    })
    run.write_csv("monomial.csv", ["k", "lambda", "provenance", "lo", "hi", "charpoly"],
                  [_radius_row(k, r) for k, r in enumerate(lams)])
    run.task("monomial", "ok")
    for k, r in enumerate(lams):
        tag = "certified" if r.certified else "UNCERTIFIED"
        print(f"lambda_{k} = {r.value:.12g}  [{tag}]  charpoly {r.charpoly_str()}")
    return EXIT_OK


@dataclass
class Surrogates:
    lambdas: list
    alphas: dict  # k -> Quantity
    cycle_estimates: list
    notes: list


def _lambdas(spec: ExperimentSpec, f: RationalMap, need_top: bool) -> list:
    if spec.monomial is not None:
        return [Quantity.from_radius(r, f"lambda_{k}") for k, r in enumerate(dynamical_degrees(spec.monomial, ROOT_TOL))]
    lams = [Quantity.exact(1, "lambda_0")]
    lam1, _ = degree_growth(f, spec.degree_horizon or min(spec.horizon, 10))
    lams.append(lam1)
    for k in range(2, f.dim + 1):
        if k == f.dim == 2 and need_top:
            if spec.seed is None:
                raise SpecError("lambda_2 needs the topological degree, a randomized computation: supply --seed")
            try:
                lams.append(Quantity.exact(topological_degree_dim2(f, spec.seed), "lambda_2 (topological degree)"))
            except TopologicalDegreeError as exc:
                raise ComputationError(str(exc)) from exc
        else:
            lams.append(Quantity(math.nan, "unavailable", f"lambda_{k}"))
    return lams


def _surrogates(spec: ExperimentSpec, f: RationalMap, inverse, lams: list, polarized_q) -> Surrogates:
    d = f.dim
    alphas = {0: Quantity.exact(1, "alpha_0")}
    notes = []
    for P in spec.points:
        q, est, orbit = point_growth(f, P, spec.horizon)
        if est is not None and not orbit.is_preperiodic():
            alphas[1] = q
            break
    else:
        notes.append("no point with a non-preperiodic orbit; alpha_1 surrogate unavailable")
    cycle_estimates = []
    if d == 2:
        for c in spec.cycles:
            strategy, rows = _cycle_orbit(spec, c, f, inverse)
            est = _cycle_growth(rows)
            if est is not None:
                cycle_estimates.append(Quantity.from_estimate(est, f"alpha_2 (curve heights of {c.text}, {strategy})"))
        if cycle_estimates:
            alphas[2] = cycle_estimates[0]
        else:
            notes.append("no cycle orbit; alpha_2 surrogate unavailable")
    else:
        notes.append(f"cycle surrogates are implemented for P^2 only; alpha_2..alpha_{d} unavailable")
    if polarized_q is not None:
        alphas[d + 1] = Quantity.exact(polarized_q ** (d + 1), f"alpha_{d + 1} = q^{d + 1} (declared polarized)")
    elif inverse is not None:
        alphas[d + 1] = Quantity.exact(1, f"alpha_{d + 1} = alpha_0(f^-1) (birational duality)")
    return Surrogates(lams, alphas, cycle_estimates, notes)


def _unmet(claim: str, why: str, tol: float) -> ConjectureReport:
    rep = ConjectureReport(claim, tolerance=tol)
    rep.notes.append(f"unmet prerequisite: {why}")
    return rep


def _inverse_alphas(spec: ExperimentSpec, f: RationalMap, g: RationalMap) -> dict:
    """Surrogates for the inverse map ``g``, pushing cycles by ``g`` with ``f`` as its inverse."""
    out = {}
    for P in spec.points:
        q, est, orbit = point_growth(g, P, spec.horizon)
        if est is not None and not orbit.is_preperiodic():
            out[1] = Quantity(q.value, q.provenance, f"alpha_1(f^-1) (point heights of {P})", q.lo, q.hi, q.terms)
            break
    if f.dim == 2 and spec.cycles:
        c = spec.cycles[0]
        if c.kind == "hypersurface":
            rows = curve_orbit_heights(g, c.obj, spec.cycle_horizon or spec.horizon, "inverse-pullback", f)
            label = f"alpha_2(f^-1) (curve heights of {c.text}, inverse-pullback)"
        else:
            rows = curve_orbit_heights(g, c.obj, spec.cycle_horizon or spec.horizon, "param")
            label = f"alpha_2(f^-1) (curve heights of {c.text}, param)"
        est = _cycle_growth(rows)
        if est is not None:
            out[2] = Quantity.from_estimate(est, label)
    return out


def run_conjectures(spec: ExperimentSpec) -> tuple:
    """All requested reports plus the surrogate table; no file output."""
    f = _need_map(spec)
    d = f.dim
    checks = list(spec.checks)
    if not checks:
        checks = [CheckSpec("product-formula"), CheckSpec("log-concavity")]
        if spec.points:
            checks.append(CheckSpec("ks-point"))
        if spec.inverse is not None:
            checks.append(CheckSpec("duality"))
        if len(spec.cycles) >= 2:
            checks.append(CheckSpec("cycle-consistency"))
    polar = next((c.params["q"] for c in checks if c.name == "polarized"), None)
    need_top = any(c.name in ("product-formula", "polarized") for c in checks)
    inverse = spec.inverse
    inverse_ok = inverse is not None and verify_inverse(f, inverse)
    lams = _lambdas(spec, f, need_top)
    sur = _surrogates(spec, f, inverse if inverse_ok else None, lams, polar)
    tol = spec.tol
    reports = []
    for chk in checks:
        if chk.name == "product-formula":
            alphas = {k: a for k, a in sur.alphas.items() if 1 <= k <= d}
            if not alphas:
                reports.append(_unmet("product-formula", "no alpha surrogate could be computed", tol))
                continue
            rep = check_product_formula(lams, alphas, tol)
            rep.notes += sur.notes
            reports.append(rep)
        elif chk.name == "log-concavity":
            table = []
            for k in range(0, d + 2):
                if k not in sur.alphas:
                    break
                table.append(sur.alphas[k])
            if len(table) < 3:
                reports.append(_unmet("log-concavity", "fewer than 3 consecutive alpha surrogates", tol))
                continue
            reports.append(check_log_concavity(table, tol, lambda1=lams[1]))
        elif chk.name == "ks-point":
            if not spec.points:
                reports.append(_unmet("ks-point", "no [points] given", tol))
            for P in spec.points:
                reports.append(check_ks_point(f, P, spec.horizon, tol, lambda1=lams[1]))
        elif chk.name == "duality":
            if inverse is None:
                reports.append(_unmet("birational-duality", "no [inverse] map supplied", tol))
                continue
            if not inverse_ok:
                reports.append(_unmet("birational-duality", "the [inverse] map is not a verified inverse", tol))
                continue
            alpha_f = {k: a for k, a in sur.alphas.items() if 1 <= k <= d}
            alpha_g = _inverse_alphas(spec, f, inverse)
            reports.append(check_birational_duality(f, inverse, alpha_f, alpha_g, tol, lambda1=lams[1]))
        elif chk.name == "polarized":
            alphas = {k: a for k, a in sur.alphas.items() if 1 <= k <= d}
            reports.append(check_polarized(chk.params["q"], lams, alphas, tol))
        elif chk.name == "cycle-consistency":
            if len(sur.cycle_estimates) < 2:
                reports.append(_unmet("cycle-consistency", "needs at least two cycles on P^2", tol))
                continue
            reports.append(check_cycle_consistency(sur.cycle_estimates, d, tol, lambda1=lams[1]))
    return reports, sur


def cmd_conjectures(spec: ExperimentSpec, run: Run) -> int:
    reports, sur = run_conjectures(spec)
    run.write_json("conjectures.json", {
        "spec_digest": spec.digest(),
        "lambdas": [q.to_dict() for q in sur.lambdas],
        "alphas": {str(k): q.to_dict() for k, q in sorted(sur.alphas.items())},
        "notes": sur.notes,
        "reports": [r.to_dict() for r in reports],
    })
    run.write_csv("conjectures.csv", ["claim", "verdict", "gap", "tolerance", "surrogate", "lines", "notes"],
                  [[r.claim, r.verdict, r.gap, r.tolerance, r.surrogate, len(r.lines), "; ".join(r.notes)]
                   for r in reports])
    for r in reports:
        print(f"{r.claim:20s} {r.verdict:13s} gap={r.gap:.3g}")
        for ln in r.lines:
            print(f"    {ln.statement}: {ln.lhs.value:.6g} [{ln.lhs.provenance}] vs "
                  f"{ln.rhs.value:.6g} [{ln.rhs.provenance}] -> {ln.verdict}")
        for note in r.notes:
            print(f"    note: {note}")
    violated = any(r.verdict == "violated" for r in reports)
    run.task("conjectures", "violated" if violated else "ok")
    return EXIT_VIOLATED if violated else EXIT_OK


def cmd_plotdata(run_dir: str | Path) -> int:
    """Two-column ``n, log value`` files for every series of a finished run."""
    root = Path(run_dir)
    manifest_path = root / "manifest.json"
    if not manifest_path.is_file():
        raise SpecError(f"no completed run in {root} (manifest.json missing)")
    manifest = json.loads(manifest_path.read_text())
    run = Run(root, "plotdata", None)
    run.outputs = {o["path"]: o for o in manifest.get("outputs", [])}
    run.tasks = list(manifest.get("tasks", []))
    series = []
    for name in sorted(run.outputs):
        if name.startswith("plotdata/"):
            continue
        path = root / name
        if name == "degrees.csv":
            series.append(("degrees", path, "degree", False, 1))
        elif re.fullmatch(r"point_\d+\.csv", name):
            series.append((name[:-4] + "_height", path, "height", True, 0))
        elif re.fullmatch(r"cycle_\d+\.csv", name):
            series.append((name[:-4] + "_height", path, "height", True, 0))
            series.append((name[:-4] + "_degree", path, "degree", False, 0))
    if not series:
        raise SpecError(f"run in {root} has no tabular series")
    # degree sequences start at n = 1; orbit tables include the source at n = 0
    for label, path, column, lifted, first in series:
        with path.open(newline="") as fh:
            rows = list(csv.DictReader(fh))
        out = []
        for r in rows:
            if int(r["n"]) < first:
                continue
            v = float(r[column])
            out.append([int(r["n"]), math.log(max(v, 1.0) if lifted else v)])
        run.write_csv(f"plotdata/{label}.csv", ["n", "log_value"], out)
        print(f"plotdata/{label}.csv: {len(out)} rows")
    run.task("plotdata", "ok")
    run.started = manifest.get("started", run.started)
    run.command = manifest.get("command", "") + "+plotdata"
    data = run.manifest()
    data["spec_digest"] = manifest.get("spec_digest")
    data["options"] = manifest.get("options")
    (root / "manifest.json").write_text(json.dumps(_clean(data), indent=2) + "\n", encoding="utf-8")
    return EXIT_OK


# ---------------------------------------------------------------- entry point

COMMANDS = {"degrees": cmd_degrees, "orbit": cmd_orbit, "monomial": cmd_monomial, "conjectures": cmd_conjectures}


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = argparse.SUPPRESS if suppress else None
    p.add_argument("--spec", default=d, help="experiment spec file")
    p.add_argument("--seed", type=int, default=d, help="seed for randomized steps (topological degree)")
    p.add_argument("--out", default=d, help="output directory (default: out)")
    p.add_argument("--tol", type=float, default=d, help="relative tolerance for float comparisons")
    p.add_argument("--horizon", type=int, default=d, help="number of iterates N")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arithdeg", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_flags(parser, False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, True)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("degrees", parents=[common], help="exact degree sequence and lambda_1 estimate")
    sub.add_parser("orbit", parents=[common], help="point and cycle height tables")
    sub.add_parser("monomial", parents=[common], help="certified dynamical degrees of a monomial map")
    sub.add_parser("conjectures", parents=[common], help="run the conjecture and theorem checks")
    pd = sub.add_parser("plotdata", parents=[common], help="emit (n, log value) series of a finished run")
    pd.add_argument("--run", help="run directory (default: --out)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = args.out or "out"
    try:
        if args.command == "plotdata":
            return cmd_plotdata(getattr(args, "run", None) or out)
        if not args.spec:
            raise SpecError("--spec is required")
        spec = load_spec(args.spec)
        if args.horizon is not None:
            spec.horizon = args.horizon
        if args.seed is not None:
            spec.seed = args.seed
        if args.tol is not None:
            spec.tol = args.tol
        spec.validate()
        run = Run(out, args.command, spec)
        try:
            code = COMMANDS[args.command](spec, run)
        finally:
            run.finish()
        return code
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ComputationError, MapError, CycleError, PolynomialError, TopologicalDegreeError, ValueError) as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return EXIT_COMPUTATION


if __name__ == "__main__":
    sys.exit(main())
