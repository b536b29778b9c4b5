"""Retraction of causally disjoint configurations onto the embedded little discs.

The path runs in two stages.

Stage 1 slides every shape along the time axis to ``t = 0`` at unit speed.
Each shape stops when it arrives; the parameter is normalized so the farthest
one arrives at ``u = 1``.  Temporal gaps between pairs never grow, and the
causal margin ``a - b - c (r1 + r2)`` only increases as ``b`` shrinks.

Stage 2 starts from a configuration in ``t = 0`` and ends in the image of the
embedding.  It replaces a sequential "slide and rescale" by two simultaneous
moves, each of which keeps every margin positive:

* shrink: all radii scale by ``mu`` going linearly from 1 to ``mu*``, the
  largest factor (<= 1) for which the preimage discs fit in the unit disc;
* contract: centers and radii scale together by ``1 - s/2``, which scales every
  causal margin by the same positive factor.

The endpoint is exactly the embedding of the (n-1)-disc configuration with
radii ``c mu* rho_j`` and centers ``x_j``.  Stage 2 contracts the embedded
image instead of fixing it pointwise, so the path certifies a retraction with
certified paths, not a strong deformation retraction.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import MarginalOrder, PathViolation, ViolatingPair
from .minkowski import MinkPoint
from .ortho import MultiMorphism, OrthoInstance, evaluate
from .rect import RectMap
from .shapes import CAUSAL_RADIUS_FACTOR

STAGE1_END = 0.5
SHRINK_END = 0.75


def _require_valid(psi: MultiMorphism):
    if psi.validity.violated:
        i, j = psi.worst()
        raise ViolatingPair(i, j, psi.margin)


def retract_stage1(psi: MultiMorphism, u: float) -> MultiMorphism:
    """Slide to ``t = 0`` at unit speed; ``u = 1`` is the arrival of the farthest shape."""
    _require_valid(psi)
    if not 0 <= u <= 1:
        raise ValueError("u must lie in [0, 1]")
    T = max((abs(f.translate.t) for f in psi.maps), default=0)
    if u == 0 or T == 0:
        return psi
    travelled = u * T
    maps = []
    for f in psi.maps:
        t = f.translate.t
        left = max(abs(t) - travelled, 0)
        maps.append(RectMap(f.scale, f.translate.with_time(left if t > 0 else -left)))
    return evaluate(psi.instance, maps)


@dataclass(frozen=True)
class _Stage2:
    instance: OrthoInstance
    radii: tuple
    centers: tuple
    mu_star: float

    def shrink(self, s: float) -> MultiMorphism:
        mu = 1 - s * (1 - self.mu_star)
        return self._config(1.0, mu)

    def contract(self, s: float) -> MultiMorphism:
        return self._config(1 - s / 2, self.mu_star)

    def _config(self, lam, mu) -> MultiMorphism:
        maps = [
            RectMap(lam * mu * rho, MinkPoint((0.0, *(lam * c for c in x))))
            for rho, x in zip(self.radii, self.centers)
        ]
        return evaluate(self.instance, maps)


def _stage2_plan(psi0: MultiMorphism) -> _Stage2:
    inst = psi0.instance
    tau = inst.tolerance
    if any(abs(float(f.translate.t)) > tau for f in psi0.maps):
        raise ValueError("stage 2 needs every center in the t = 0 hyperplane")
    _require_valid(psi0)
    bad = [(ij, m) for ij, m in psi0.pair_margins.items() if m <= tau]
    if bad:
        (i, j), m = bad[0]
        raise ViolatingPair(i, j, m)
    c = CAUSAL_RADIUS_FACTOR[inst.shape_kind]
    radii = tuple(float(f.scale) for f in psi0.maps)
    centers = tuple(tuple(float(v) for v in f.translate.x) for f in psi0.maps)
    mu = 1.0
    for rho, f in zip(radii, psi0.maps):
        mu = min(mu, (1 - f.translate.spatial_norm()) / (c * rho))
    return _Stage2(inst, radii, centers, mu)


@dataclass
class HomotopyPath:
    """A path of operations over ``[0, 1]`` with validated samples.

    ``pieces`` lists ``(u0, u1, fn)`` where ``fn`` takes the local parameter
    in ``[0, 1]``.  ``samples`` holds ``(u, operation)`` pairs, each of which
    was checked to stay inside the operad.
    """

    instance: OrthoInstance
    start: MultiMorphism
    breakpoints: tuple
    pieces: list = field(repr=False)
    samples: list = field(default_factory=list, repr=False)
    stage1_constant: bool = False

    def at(self, u: float) -> MultiMorphism:
        if u == 0:
            return self.start
        for u0, u1, fn in self.pieces:
            if u0 <= u <= u1:
                return fn((u - u0) / (u1 - u0) if u1 > u0 else 1.0)
        raise ValueError(f"u={u!r} outside [0, 1]")

    @property
    def endpoint(self) -> MultiMorphism:
        return self.at(1.0)

    @property
    def min_margin(self) -> float:
        return min((mm.margin for _, mm in self.samples), default=float("inf"))

    def certify(self, count: int) -> "HomotopyPath":
        """Sample ``count`` uniform parameters, raising :class:`PathViolation` on the first bad one."""
        if count < 2:
            raise ValueError("need at least two samples")
        self.samples = []
        for i in range(count):
            u = i / (count - 1)
            mm = self.at(u)
            if mm.validity.violated:
                raise PathViolation(u, mm.worst(), mm.margin)
            self.samples.append((u, mm))
        return self


def retract_stage2(psi0: MultiMorphism) -> HomotopyPath:
    plan = _stage2_plan(psi0)
    return HomotopyPath(
        psi0.instance, psi0, (0.0, 0.5, 1.0),
        [(0.0, 0.5, plan.shrink), (0.5, 1.0, plan.contract)],
    )


def retract_full(psi: MultiMorphism, samples: int = 100) -> HomotopyPath:
    """Stage 1 on ``[0, 1/2]``, shrink on ``[1/2, 3/4]``, contract on ``[3/4, 1]``."""
    _require_valid(psi)
    psi0 = retract_stage1(psi, 1.0)
    plan = _stage2_plan(psi0)
    pieces = [
        (0.0, STAGE1_END, lambda s: retract_stage1(psi, s)),
        (STAGE1_END, SHRINK_END, plan.shrink),
        (SHRINK_END, 1.0, plan.contract),
    ]
    constant = all(f.translate.t == 0 for f in psi.maps)
    path = HomotopyPath(psi.instance, psi, (0.0, STAGE1_END, SHRINK_END, 1.0), pieces, stage1_constant=constant)
    return path.certify(samples)


def spatial_order(psi: MultiMorphism, tau: float | None = None) -> tuple:
    """Indices sorted left to right by spatial center (two-dimensional instances only)."""
    if psi.instance.dimension != 2:
        raise ValueError("spatial order is defined for n = 2 only")
    tau = psi.instance.tolerance if tau is None else tau
    xs = [float(f.translate.x[0]) for f in psi.maps]
    order = tuple(sorted(range(len(xs)), key=lambda i: xs[i]))
    for a, b in zip(order, order[1:]):
        if xs[b] - xs[a] <= tau:
            raise MarginalOrder(f"maps {a} and {b} share spatial coordinate {xs[a]!r}")
    return order
