"""Causal geometry of flat Minkowski space R^{1,n-1}.

Conventions
-----------
Coordinates are ordered ``(t, x_1, ..., x_{n-1})``.  The metric has signature
``(-, +, ..., +)`` so that ``eta(v, v) = -t**2 + |x|**2`` and a vector is
timelike or null exactly when ``eta(v, v) <= 0``.

Causal curves are never represented.  Minkowski space is geodesically convex,
so a causal curve from ``p`` to ``q`` exists iff the straight segment between
them is causal, i.e. iff ``|q.t - p.t| >= |q.x - p.x|``.  Every predicate in
the package reduces to this cone inequality.
"""
from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real

from .errors import DimensionMismatch

#: Diagonal of the metric on ``(t, x_1, ...)``; only the sign of the first entry differs.
TIME_SIGN = -1
SPACE_SIGN = +1

DEFAULT_TOLERANCE = 1e-9


def default_tolerance() -> float:
    """Tolerance used when callers pass none; ``CDOPS_TOLERANCE`` overrides it."""
    raw = os.environ.get("CDOPS_TOLERANCE")
    if raw is None:
        return DEFAULT_TOLERANCE
    tau = float(raw)
    if not math.isfinite(tau) or tau < 0:
        raise ValueError(f"CDOPS_TOLERANCE must be a finite non-negative number, got {raw!r}")
    return tau


def _tau(tau):
    return default_tolerance() if tau is None else tau


@dataclass(frozen=True)
class MinkPoint:
    """A point or vector of R^{1,n-1}, stored as the flat tuple ``(t, *x)``.

    Coordinates may be floats or :class:`fractions.Fraction`; arithmetic keeps
    whichever type it is given.
    """

    coords: tuple

    def __post_init__(self):
        coords = tuple(self.coords)
        if not coords:
            raise DimensionMismatch("a point needs at least one coordinate")
        for c in coords:
            if not isinstance(c, Real) or not math.isfinite(c):
                raise ValueError(f"coordinates must be finite reals, got {c!r}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, t, *x) -> "MinkPoint":
        return cls((t, *x))

    @classmethod
    def origin(cls, n: int) -> "MinkPoint":
        return cls((0,) * n)

    @property
    def t(self):
        return self.coords[0]

    @property
    def x(self) -> tuple:
        return self.coords[1:]

    @property
    def dim(self) -> int:
        return len(self.coords)

    def _check(self, other: "MinkPoint"):
        if self.dim != other.dim:
            raise DimensionMismatch(f"dimension {self.dim} vs {other.dim}")

    def __add__(self, other: "MinkPoint") -> "MinkPoint":
        self._check(other)
        return MinkPoint(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "MinkPoint") -> "MinkPoint":
        self._check(other)
        return MinkPoint(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scaled(self, r) -> "MinkPoint":
        return MinkPoint(tuple(r * c for c in self.coords))

    def with_time(self, t) -> "MinkPoint":
        return MinkPoint((t, *self.x))

    def to_float(self) -> "MinkPoint":
        return MinkPoint(tuple(float(c) for c in self.coords))

    def to_rational(self) -> "MinkPoint":
        return MinkPoint(tuple(Fraction(c) for c in self.coords))

    def norm(self) -> float:
        """Euclidean norm of all n coordinates."""
        return math.hypot(*(float(c) for c in self.coords))

    def spatial_norm(self) -> float:
        return math.hypot(*(float(c) for c in self.x)) if self.dim > 1 else 0.0


def as_point(p) -> MinkPoint:
    return p if isinstance(p, MinkPoint) else MinkPoint(tuple(p))


def mink_inner(u, v):
    """Minkowski inner product ``-u.t*v.t + <u.x, v.x>``; exact on Fractions."""
    u, v = as_point(u), as_point(v)
    u._check(v)
    return TIME_SIGN * u.t * v.t + SPACE_SIGN * sum(a * b for a, b in zip(u.x, v.x))


class CausalKind(enum.Enum):
    TIMELIKE = "timelike"
    NULL = "null"
    SPACELIKE = "spacelike"


@dataclass(frozen=True)
class CausalClass:
    kind: CausalKind
    margin: float


def causal_class(v, tau: float | None = None) -> CausalClass:
    """Classify ``v`` by the sign of ``eta(v, v)`` with a null band of width ``tau``."""
    tau = _tau(tau)
    if tau < 0:
        raise ValueError("tolerance must be non-negative")
    margin = mink_inner(v, v)
    if margin < -tau:
        kind = CausalKind.TIMELIKE
    elif margin > tau:
        kind = CausalKind.SPACELIKE
    else:
        kind = CausalKind.NULL
    return CausalClass(kind, margin)


class PointRelation(enum.Enum):
    RELATED = "related"
    UNRELATED = "unrelated"
    MARGINAL = "marginal"


def cone_separation(p, q) -> float:
    """``|dx| - |dt|``; negative iff ``q`` lies strictly inside the light cone of ``p``."""
    d = as_point(q) - as_point(p)
    return d.spatial_norm() - abs(float(d.t))


def points_causally_related(p, q, tau: float | None = None) -> PointRelation:
    tau = _tau(tau)
    s = cone_separation(p, q)
    if s < -tau:
        return PointRelation.RELATED
    if s > tau:
        return PointRelation.UNRELATED
    return PointRelation.MARGINAL


def boost(p, rapidity: float, axis: int = 1) -> MinkPoint:
    """Lorentz boost mixing ``t`` with spatial coordinate ``axis``."""
    p = as_point(p)
    ch, sh = math.cosh(rapidity), math.sinh(rapidity)
    c = [float(v) for v in p.coords]
    t, xa = c[0], c[axis]
    c[0] = ch * t + sh * xa
    c[axis] = sh * t + ch * xa
    return MinkPoint(tuple(c))
