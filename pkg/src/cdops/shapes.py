"""Balls and causal diamonds, and closed-form disjointness predicates on them.

Every predicate returns a :class:`Ternary` carrying a signed *margin*.  For two
shapes with centers ``c1, c2`` write ``a = |c1.x - c2.x|`` and
``b = |c1.t - c2.t|``.  Causal disjointness amounts to ``inf |dx| - |dt| > 0``
over the Minkowski difference of the shapes, which is a ball (resp. diamond)
of radius ``r1 + r2`` about ``c2 - c1``.  Minimizing over that set gives

* balls:    ``a - b - sqrt(2) * (r1 + r2)``  (optimum along a null diagonal)
* diamonds: ``a - b - (r1 + r2)``            (the diamond norm is ``|t| + |x|``)

Both are exact values of the infimum whenever they are positive, and agree with
its sign otherwise.  :mod:`cdops.oracle` re-derives them by brute force.

Boundary conventions: images of the closed disc are closed, so a null contact
(margin 0) is *not* disjoint for balls; diamonds are open, so null contact is
disjoint.  Both cases surface as ``MARGINAL`` and :meth:`Ternary.decide` applies
the convention.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from numbers import Real

from .errors import DimensionMismatch, EmptyDiamond, KindMismatch, NotAxisAligned
from .minkowski import MinkPoint, _tau, as_point

SQRT2 = math.sqrt(2.0)


class Kind(enum.Enum):
    BALL = "ball"
    DIAMOND = "diamond"


class Boundary(enum.Enum):
    OPEN = "open"
    CLOSED = "closed"


DEFAULT_BOUNDARY = {Kind.BALL: Boundary.CLOSED, Kind.DIAMOND: Boundary.OPEN}

#: Factor multiplying ``r1 + r2`` in the causal margin of each kind.
CAUSAL_RADIUS_FACTOR = {Kind.BALL: SQRT2, Kind.DIAMOND: 1.0}


@dataclass(frozen=True)
class Shape:
    kind: Kind
    center: MinkPoint
    radius: Real
    boundary: Boundary | None = None

    def __post_init__(self):
        object.__setattr__(self, "center", as_point(self.center))
        if not isinstance(self.radius, Real) or not math.isfinite(self.radius) or self.radius <= 0:
            raise ValueError(f"radius must be positive and finite, got {self.radius!r}")
        if self.boundary is None:
            object.__setattr__(self, "boundary", DEFAULT_BOUNDARY[self.kind])

    @property
    def dim(self) -> int:
        return self.center.dim

    def norm_of(self, v: MinkPoint) -> float:
        """The gauge of this kind: Euclidean norm for balls, ``|t| + |x|`` for diamonds."""
        if self.kind is Kind.BALL:
            return v.norm()
        return abs(float(v.t)) + v.spatial_norm()

    def gauge(self, p) -> float:
        """``norm(p - center) / radius``; the shape is the (sub)level set ``<= 1``."""
        return self.norm_of(as_point(p) - self.center) / float(self.radius)


def ball(center, radius, boundary=None) -> Shape:
    return Shape(Kind.BALL, as_point(center), radius, boundary)


def diamond(center, radius, boundary=None) -> Shape:
    return Shape(Kind.DIAMOND, as_point(center), radius, boundary)


def unit_shape(kind: Kind, n: int) -> Shape:
    return Shape(kind, MinkPoint.origin(n), 1)


class Status(enum.Enum):
    DISJOINT = "disjoint"
    NOT_DISJOINT = "not_disjoint"
    MARGINAL = "marginal"


@dataclass(frozen=True)
class Ternary:
    status: Status
    margin: float

    @classmethod
    def classify(cls, margin: float, tau: float | None = None) -> "Ternary":
        tau = _tau(tau)
        if margin > tau:
            return cls(Status.DISJOINT, margin)
        if margin < -tau:
            return cls(Status.NOT_DISJOINT, margin)
        return cls(Status.MARGINAL, margin)

    @property
    def disjoint(self) -> bool:
        return self.status is Status.DISJOINT

    @property
    def violated(self) -> bool:
        return self.status is Status.NOT_DISJOINT

    def decide(self, boundary: Boundary) -> bool:
        """Resolve the marginal band: open sets touching only in closures are disjoint."""
        if self.status is Status.MARGINAL:
            return boundary is Boundary.OPEN
        return self.status is Status.DISJOINT


def contains(shape: Shape, p) -> bool:
    """Membership of ``p`` respecting the shape's boundary convention."""
    p = as_point(p)
    if p.dim != shape.dim:
        raise DimensionMismatch(f"point of dimension {p.dim} vs shape of dimension {shape.dim}")
    d = shape.norm_of(p - shape.center)
    r = float(shape.radius)
    return d < r if shape.boundary is Boundary.OPEN else d <= r


def _pair(s1: Shape, s2: Shape, kind: Kind | None):
    if s1.dim != s2.dim:
        raise DimensionMismatch(f"shapes of dimension {s1.dim} and {s2.dim}")
    if s1.kind is not s2.kind or (kind is not None and s1.kind is not kind):
        raise KindMismatch(f"expected two {kind.value if kind else s1.kind.value}s")
    d = s2.center - s1.center
    return d.spatial_norm(), abs(float(d.t)), float(s1.radius) + float(s2.radius)


def causal_margin(s1: Shape, s2: Shape) -> float:
    a, b, r = _pair(s1, s2, None)
    return a - b - CAUSAL_RADIUS_FACTOR[s1.kind] * r


def balls_causally_disjoint(b1: Shape, b2: Shape, tau: float | None = None) -> Ternary:
    a, b, r = _pair(b1, b2, Kind.BALL)
    return Ternary.classify(a - b - SQRT2 * r, tau)


def diamonds_causally_disjoint(d1: Shape, d2: Shape, tau: float | None = None) -> Ternary:
    a, b, r = _pair(d1, d2, Kind.DIAMOND)
    return Ternary.classify(a - b - r, tau)


def causally_disjoint(s1: Shape, s2: Shape, tau: float | None = None) -> Ternary:
    if s1.kind is Kind.BALL:
        return balls_causally_disjoint(s1, s2, tau)
    return diamonds_causally_disjoint(s1, s2, tau)


def set_interiors_disjoint(s1: Shape, s2: Shape, tau: float | None = None) -> Ternary:
    _, _, r = _pair(s1, s2, None)
    return Ternary.classify(s1.norm_of(s2.center - s1.center) - r, tau)


def contained_in_unit(s: Shape, tau: float | None = None) -> Ternary:
    """Margin ``1 - (|c| + r)`` in the shape's own norm; positive means strictly inside."""
    return Ternary.classify(1.0 - (s.norm_of(s.center) + float(s.radius)), tau)


def diamond_between(p_past, p_future, tau: float | None = None) -> Shape:
    """The open diamond ``I^+(p_past) & I^-(p_future)`` for spatially aligned endpoints."""
    tau = _tau(tau)
    p, q = as_point(p_past), as_point(p_future)
    d = q - p
    dt = float(d.t)
    if not (dt > 0 and dt > d.spatial_norm()):
        raise EmptyDiamond(f"{q.coords} is not in the chronological future of {p.coords}")
    if d.spatial_norm() > tau:
        raise NotAxisAligned("endpoints differ spatially; the region is not a rectilinear diamond")
    center = (p + q).scaled(0.5)
    return Shape(Kind.DIAMOND, center, dt / 2, Boundary.OPEN)


def delta_shift(b: Shape, delta, direction: int = 0) -> Shape:
    """Move the center of ``b`` by ``delta`` along the time axis.

    ``direction=0`` moves toward ``t = 0`` and requires ``delta < |center.t|``
    (``delta = 0`` is always allowed); ``direction=+1`` / ``-1`` move to the
    future / past without restriction.
    """
    if delta < 0:
        raise ValueError("delta must be non-negative")
    t = b.center.t
    if direction == 0:
        if delta and not delta < abs(t):
            raise ValueError(f"delta {delta!r} must be below |t| = {abs(t)!r}")
        step = -delta if t > 0 else delta
    elif direction in (1, -1):
        step = direction * delta
    else:
        raise ValueError("direction must be -1, 0 or +1")
    return Shape(b.kind, b.center.with_time(t + step), b.radius, b.boundary)
