"""The operads of causally disjoint discs and diamonds, and the maps between them.

Embedding little (n-1)-discs into causally disjoint n-discs
-----------------------------------------------------------
For a component ``x -> r x + b`` of a Disc_{n-1} operation:

1. halve it and put it in the ``t = 0`` hyperplane: an (n-1)-disc of radius
   ``r/2`` centered ``(0, b/2)``;
2. take the double cone over it with null (45 degree) sides.  That is the
   diamond ``|t| + |x - b/2| <= r/2``;
3. inscribe the largest n-ball.  The closest boundary points of a diamond of
   radius ``rho`` lie on its faces at Euclidean distance ``rho / sqrt(2)``.

So the component becomes ``scale = r / (2 sqrt 2)``, ``translate = (0, b/2)``.
For diamonds step 3 is vacuous (the cone *is* the largest diamond) and the
component is ``(r/2, (0, b/2))``.  Two such images lie in ``t = 0`` with causal
margin ``(|b_i - b_j| - r_i - r_j) / 2``, half the Disc_{n-1} margin.  Tangent
discs therefore give null-touching images, which are not causally disjoint
under the closed-ball convention.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .errors import ViolatingPair
from .minkowski import MinkPoint
from .ortho import MultiMorphism, OrthoInstance, Relation, evaluate, multi_validate
from .rect import RectMap
from .shapes import Kind

HALF = Fraction(1, 2)

#: Radius of the largest shape of each kind inscribed in a diamond of radius 1.
INSCRIBED_FACTOR = {Kind.BALL: 1 / math.sqrt(2), Kind.DIAMOND: 1}


def cd(n: int, tolerance: float | None = None) -> OrthoInstance:
    return _make(f"CD{n}", n, Kind.BALL, Relation.CAUSALLY_DISJOINT, tolerance)


def disc(n: int, tolerance: float | None = None) -> OrthoInstance:
    return _make(f"Disc{n}", n, Kind.BALL, Relation.INTERIOR_DISJOINT, tolerance)


def cdiam(n: int, tolerance: float | None = None) -> OrthoInstance:
    return _make(f"CDiam{n}", n, Kind.DIAMOND, Relation.CAUSALLY_DISJOINT, tolerance)


def diam(n: int, tolerance: float | None = None) -> OrthoInstance:
    """Diamonds with disjoint interiors; the target of the forgetful map on CDiam_n."""
    return _make(f"Diam{n}", n, Kind.DIAMOND, Relation.INTERIOR_DISJOINT, tolerance)


def _make(name, n, kind, relation, tolerance):
    if tolerance is None:
        return OrthoInstance(name, n, kind, relation)
    return OrthoInstance(name, n, kind, relation, tolerance)


CATALOG = {"cd": cd, "disc": disc, "cdiam": cdiam, "diam": diam}


def by_name(relation: str, n: int, tolerance: float | None = None) -> OrthoInstance:
    return CATALOG[relation](n, tolerance)


def causal_target(phi_inst: OrthoInstance, kind: Kind) -> OrthoInstance:
    n = phi_inst.dimension + 1
    return cd(n, phi_inst.tolerance) if kind is Kind.BALL else cdiam(n, phi_inst.tolerance)


def _embed_map(f: RectMap, kind: Kind) -> RectMap:
    factor = INSCRIBED_FACTOR[kind]
    zero = f.scale * 0
    return RectMap(f.scale * HALF * factor, MinkPoint((zero, *(c * HALF for c in f.translate.coords))))


def epsilon_embed(phi: MultiMorphism, kind: Kind = Kind.BALL) -> MultiMorphism:
    """Send a Disc_{n-1} operation to a CD_n (or CDiam_n) operation.

    The result's validity is ``MARGINAL`` exactly when some input pair is
    tangent, flagging the null contact instead of hiding it.
    """
    src = phi.instance
    if src.relation is not Relation.INTERIOR_DISJOINT or src.shape_kind is not Kind.BALL:
        raise ValueError(f"epsilon_embed expects a Disc operation, got {src.name}")
    phi = multi_validate(src, phi.maps)
    out = evaluate(causal_target(src, kind), [_embed_map(f, kind) for f in phi.maps])
    if out.validity.violated:
        i, j = out.worst()
        raise ViolatingPair(i, j, out.margin)
    return out


def forget_omega(psi: MultiMorphism) -> MultiMorphism:
    """Reread a causally disjoint operation as one with disjoint interiors."""
    src = psi.instance
    if src.relation is not Relation.CAUSALLY_DISJOINT:
        raise ValueError(f"forget_omega expects a causal instance, got {src.name}")
    target = (disc if src.shape_kind is Kind.BALL else diam)(src.dimension, src.tolerance)
    return multi_validate(target, psi.maps)


def embed_then_forget(phi: MultiMorphism, kind: Kind = Kind.BALL) -> MultiMorphism:
    return forget_omega(epsilon_embed(phi, kind))


def epsilon_preimage(psi: MultiMorphism) -> MultiMorphism:
    """Invert the embedding on its image: drop ``t`` and undo the scalings.

    Does not check that ``psi`` is in the image; see :func:`in_epsilon_image`.
    """
    inst = psi.instance
    factor = INSCRIBED_FACTOR[inst.shape_kind]
    maps = [RectMap(f.scale * 2 / factor, MinkPoint(tuple(c * 2 for c in f.translate.x))) for f in psi.maps]
    return evaluate(disc(inst.dimension - 1, inst.tolerance), maps)


def in_epsilon_image(psi: MultiMorphism, tol: float = 1e-9) -> bool:
    """Whether ``psi`` equals the embedding of a Disc_{n-1} operation, coordinatewise within ``tol``."""
    if any(abs(float(f.translate.t)) > tol for f in psi.maps):
        return False
    phi = epsilon_preimage(psi)
    if phi.validity.violated:
        return False
    again = [_embed_map(f, psi.instance.shape_kind) for f in phi.maps]
    return all(a.is_close(b, tol) for a, b in zip(again, psi.maps))
