"""Rectilinear embeddings ``x -> scale * x + translate``.

These are the morphisms of every category in the package.  All categories have
a single object, so a map carries no codomain.  Arithmetic is generic: with
:class:`fractions.Fraction` scales and translates, composition is exact and the
operad laws can be checked with ``==``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real

from .errors import DimensionMismatch
from .minkowski import MinkPoint, as_point
from .shapes import DEFAULT_BOUNDARY, Kind, Shape


@dataclass(frozen=True)
class RectMap:
    scale: Real
    translate: MinkPoint

    def __post_init__(self):
        object.__setattr__(self, "translate", as_point(self.translate))
        if not isinstance(self.scale, Real) or not math.isfinite(self.scale) or self.scale <= 0:
            raise ValueError(f"scale must be positive and finite, got {self.scale!r}")

    @property
    def dim(self) -> int:
        return self.translate.dim

    @classmethod
    def identity(cls, n: int, exact: bool = False) -> "RectMap":
        one = Fraction(1) if exact else 1.0
        return cls(one, MinkPoint((one * 0,) * n))

    def __call__(self, p) -> MinkPoint:
        return rect_apply(self, p)

    def __matmul__(self, other: "RectMap") -> "RectMap":
        return rect_compose(self, other)

    def to_rational(self) -> "RectMap":
        return RectMap(Fraction(self.scale), self.translate.to_rational())

    def to_float(self) -> "RectMap":
        return RectMap(float(self.scale), self.translate.to_float())

    def is_close(self, other: "RectMap", tol: float) -> bool:
        if self.dim != other.dim:
            return False
        pairs = [(self.scale, other.scale), *zip(self.translate.coords, other.translate.coords)]
        return all(abs(float(a) - float(b)) <= tol for a, b in pairs)


def rect_apply(f: RectMap, p) -> MinkPoint:
    p = as_point(p)
    if p.dim != f.dim:
        raise DimensionMismatch(f"map of dimension {f.dim} applied to point of dimension {p.dim}")
    return p.scaled(f.scale) + f.translate


def rect_compose(f: RectMap, g: RectMap) -> RectMap:
    """``f o g``: first ``g``, then ``f``."""
    if f.dim != g.dim:
        raise DimensionMismatch(f"cannot compose maps of dimension {f.dim} and {g.dim}")
    return RectMap(f.scale * g.scale, g.translate.scaled(f.scale) + f.translate)


def rect_image(f: RectMap, kind: Kind) -> Shape:
    """Image of the unit ball or unit diamond; homogeneity of both norms makes it a shape of the same kind."""
    return Shape(kind, f.translate, f.scale, DEFAULT_BOUNDARY[kind])


def rect_from_shape(s: Shape) -> RectMap:
    return RectMap(s.radius, s.center)
