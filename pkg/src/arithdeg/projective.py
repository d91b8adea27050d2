"""Rational points of projective space, Weil heights and point orbits."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:
    from .ratmap import RationalMap


class PointError(ValueError):
    pass


@dataclass(frozen=True)
class ProjectivePoint:
    """Canonical integer representative of a point of P^d.

    Coordinates are coprime and the first nonzero one is positive.  Build
    instances with :func:`normalize_point` unless the tuple is known canonical.
    """

    coords: tuple

    def __post_init__(self):
        c = tuple(int(x) for x in self.coords)
        if not any(c):
            raise PointError("all coordinates are zero")
        if reduce(math.gcd, c) != 1 or next(x for x in c if x) < 0:
            raise PointError(f"{c} is not a canonical representative; use normalize_point")
        object.__setattr__(self, "coords", c)

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def __str__(self) -> str:
        return "[" + ":".join(str(x) for x in self.coords) + "]"


def normalize_point(raw: Sequence[int]) -> ProjectivePoint:
    """Divide out the coordinate gcd and make the first nonzero entry positive.

    >>> str(normalize_point((4, 6, 2)))
    '[2:3:1]'
    """
    raw = [int(x) for x in raw]
    if not any(raw):
        raise PointError("all coordinates are zero")
    g = reduce(math.gcd, raw)
    if next(x for x in raw if x) < 0:
        g = -g
    return ProjectivePoint(tuple(x // g for x in raw))


def parse_point(text: str) -> ProjectivePoint:
    """Read the ``[a:b:c]`` notation (brackets optional)."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    try:
        coords = [int(part) for part in body.split(":")]
    except ValueError:
        raise PointError(f"malformed point {text!r}") from None
    if len(coords) < 2:
        raise PointError(f"point {text!r} needs at least two coordinates")
    return normalize_point(coords)


def weil_height(P: ProjectivePoint) -> float:
    """Natural-log Weil height ``log max |x_i|`` of the canonical representative."""
    return math.log(max(abs(x) for x in P.coords))


@dataclass(frozen=True)
class Indeterminate:
    """Returned by :func:`apply_map` when every component vanishes at ``point``."""

    point: ProjectivePoint

    def __bool__(self) -> bool:
        return False


def apply_map(f: "RationalMap", P: ProjectivePoint) -> ProjectivePoint | Indeterminate:
    if f.dim != P.dim:
        raise PointError(f"map on P^{f.dim} applied to a point of P^{P.dim}")
    values = [c.evaluate(P.coords) for c in f.components]
    if not any(values):
        return Indeterminate(P)
    return normalize_point(values)


@dataclass(frozen=True)
class OrbitRecord:
    n: int
    point: ProjectivePoint
    height: float


class PointOrbit(list):
    """List of :class:`OrbitRecord` plus the reason iteration stopped early.

    ``stop_reason`` is None when the full horizon was reached.
    """

    def __init__(self, records=(), stop_reason: str | None = None):
        super().__init__(records)
        self.stop_reason = stop_reason

    @property
    def truncated(self) -> bool:
        return self.stop_reason is not None

    def heights(self) -> list:
        return [r.height for r in self]

    def is_preperiodic(self) -> bool:
        seen = set()
        for r in self:
            if r.point in seen:
                return True
            seen.add(r.point)
        return False


def point_orbit_heights(f: "RationalMap", P: ProjectivePoint, N: int) -> PointOrbit:
    """Heights of ``f^n(P)`` for ``n = 0..N``.

    Stops at the first indeterminate iterate; the orbit records why.
    """
    if N < 1:
        raise ValueError("horizon must be at least 1")
    orbit = PointOrbit([OrbitRecord(0, P, weil_height(P))])
    current = P
    for n in range(1, N + 1):
        image = apply_map(f, current)
        if isinstance(image, Indeterminate):
            orbit.stop_reason = f"f^{n - 1}(P) = {current} lies in the indeterminacy locus"
            break
        current = image
        orbit.append(OrbitRecord(n, current, weil_height(current)))
    return orbit
