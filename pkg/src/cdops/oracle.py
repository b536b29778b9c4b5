"""Brute-force search for causally related point pairs between two shapes.

The oracle minimizes ``f(p, q) = |q.x - p.x| - |q.t - p.t|`` over ``p`` in one
shape and ``q`` in the other.  It knows nothing about the closed-form margins
in :mod:`cdops.shapes`; it only uses shape membership.  A negative value is a
concrete witness that the shapes are causally related.  A positive value is
only evidence, since the search returns an upper bound on the infimum.

Search: seeded uniform samples (rejection from the bounding box) evaluated on
all pairs, then alternating per-point coordinate descent from the best few
pairs in each time orientation, interleaved with random moves of both points.  A trial move that leaves a shape is pulled back radially toward the
shape's center, which lets the search slide along the boundary.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch
from .minkowski import MinkPoint
from .shapes import Kind, Shape

N_STARTS = 4
MIN_STEP = 1e-13


@dataclass(frozen=True)
class SeparationReport:
    min_value: float
    witness_pair: tuple[MinkPoint, MinkPoint]
    evaluations: int


def _gauge(kind: Kind, v) -> float:
    if kind is Kind.BALL:
        return math.sqrt(sum(c * c for c in v))
    return abs(v[0]) + math.sqrt(sum(c * c for c in v[1:]))


def _gauge_many(kind: Kind, v: np.ndarray) -> np.ndarray:
    if kind is Kind.BALL:
        return np.sqrt((v * v).sum(axis=1))
    return np.abs(v[:, 0]) + np.sqrt((v[:, 1:] ** 2).sum(axis=1))


def sample_in_shape(shape, count: int, rng: np.random.Generator) -> np.ndarray:
    """``count`` points uniform in the (closed) shape, by rejection from its bounding box."""
    if isinstance(shape, MinkPoint):
        return np.tile(np.array([float(v) for v in shape.coords]), (count, 1))
    n = shape.dim
    c = np.array([float(v) for v in shape.center.coords])
    r = float(shape.radius)
    out = np.empty((0, n))
    while len(out) < count:
        cand = rng.uniform(-1.0, 1.0, size=(2 * count + 8, n))
        cand = cand[_gauge_many(shape.kind, cand) <= 1.0]
        out = np.vstack([out, cand])
    return c + r * out[:count]


def _objective(p, q) -> float:
    dx = math.sqrt(sum((b - a) ** 2 for a, b in zip(p[1:], q[1:])))
    return dx - abs(q[0] - p[0])


class _Projector:
    """Pull points outside a shape back to its boundary along the ray to the center."""

    def __init__(self, shape):
        if isinstance(shape, MinkPoint):
            self.kind, self.r = Kind.BALL, 0.0
            self.c = [float(v) for v in shape.coords]
        else:
            self.kind, self.r = shape.kind, float(shape.radius)
            self.c = [float(v) for v in shape.center.coords]

    def __call__(self, p):
        rel = [a - b for a, b in zip(p, self.c)]
        g = _gauge(self.kind, rel)
        if g <= self.r:
            return p
        if self.r == 0.0:
            return list(self.c)
        s = self.r / g
        q = [b + s * a for a, b in zip(rel, self.c)]
        # rounding can leave the point a hair outside
        if _gauge(self.kind, [a - b for a, b in zip(q, self.c)]) > self.r:
            s *= 1.0 - 4e-16
            q = [b + s * a for a, b in zip(rel, self.c)]
        return q


def _descend(p, q, proj_p, proj_q, radii, budget, rng):
    """Local search from ``(p, q)``; returns (value, p, q, evaluations used).

    Each round sweeps the coordinates of one point, then the other, then tries
    a few random directions moving both points at once; the joint moves follow
    the curved valley that pure alternation creeps along.  Steps double after
    a successful round and halve after a failed one.
    """
    n = len(p)
    big = max(radii)
    if big == 0.0:
        return _objective(p, q), list(p), list(q), 0
    w = [r / big for r in radii]
    step = [r / 4 for r in radii]
    cap = [4.0 * s for s in step]
    joint, joint_cap = big / 4, big
    dirs = rng.standard_normal((64, 2 * n))
    dirs = (dirs / np.linalg.norm(dirs, axis=1)[:, None]).tolist()
    k = 0
    pts = [list(p), list(q)]
    projs = (proj_p, proj_q)
    best = _objective(*pts)
    used = 0
    while used < budget and max(step[0], step[1], joint) > MIN_STEP:
        for which in (0, 1):
            if step[which] <= MIN_STEP:
                continue
            improved = False
            for d in range(n):
                for sign in (1.0, -1.0):
                    if used >= budget:
                        break
                    trial = list(pts[which])
                    trial[d] += sign * step[which]
                    trial = projs[which](trial)
                    val = _objective(trial, pts[1]) if which == 0 else _objective(pts[0], trial)
                    used += 1
                    if val < best:
                        best = val
                        pts[which] = trial
                        improved = True
            step[which] = min(2.0 * step[which], cap[which]) if improved else 0.5 * step[which]
        if joint <= MIN_STEP:
            continue
        improved = False
        for _ in range(2 * n):
            if used >= budget:
                break
            d = dirs[k % len(dirs)]
            k += 1
            tp = proj_p([a + joint * w[0] * b for a, b in zip(pts[0], d[:n])])
            tq = proj_q([a + joint * w[1] * b for a, b in zip(pts[1], d[n:])])
            val = _objective(tp, tq)
            used += 1
            if val < best:
                best, pts = val, [tp, tq]
                improved = True
        joint = min(2.0 * joint, joint_cap) if improved else 0.5 * joint
    return best, pts[0], pts[1], used


def _radius(shape) -> float:
    return 0.0 if isinstance(shape, MinkPoint) else float(shape.radius)


def oracle_min_separation(S, T, budget: int = 10_000, seed: int = 0) -> SeparationReport:
    """Search for the minimum of ``|dx| - |dt|`` over ``S x T``.

    ``S`` and ``T`` are shapes; a bare :class:`MinkPoint` stands for a singleton.

    Deterministic for fixed ``(seed, budget)``.  ``evaluations`` never exceeds
    ``budget``.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    if S.dim != T.dim:
        raise DimensionMismatch(f"shapes of dimension {S.dim} and {T.dim}")
    rng = np.random.default_rng(seed)

    m = max(1, math.isqrt(budget // 2))
    P = sample_in_shape(S, m, rng)
    Q = sample_in_shape(T, m, rng)
    dt = np.abs(Q[None, :, 0] - P[:, None, 0])
    dx = np.sqrt(((Q[None, :, 1:] - P[:, None, 1:]) ** 2).sum(axis=2))
    F = dx - dt
    used = m * m

    # f has one local minimum per time orientation of q - p; seed both branches
    future = (Q[None, :, 0] - P[:, None, 0]) >= 0
    starts = []
    for branch in (future, ~future):
        masked = np.where(branch, F, np.inf)
        for idx in np.argsort(masked, axis=None, kind="stable")[: N_STARTS // 2]:
            i, j = divmod(int(idx), m)
            if np.isfinite(masked[i, j]):
                starts.append((P[i].tolist(), Q[j].tolist(), float(F[i, j])))
    starts.sort(key=lambda s: s[2])
    best_val, best_p, best_q = starts[0][2], starts[0][0], starts[0][1]

    proj_s, proj_t = _Projector(S), _Projector(T)
    radii = (_radius(S), _radius(T))
    remaining = budget - used
    for k, (p, q, _) in enumerate(starts):
        share = remaining // (len(starts) - k)
        if share <= 0:
            break
        val, p2, q2, spent = _descend(p, q, proj_s, proj_t, radii, share, rng)
        remaining -= spent
        used += spent
        if val < best_val:
            best_val, best_p, best_q = val, p2, q2

    return SeparationReport(
        min_value=_objective(best_p, best_q),
        witness_pair=(MinkPoint(tuple(best_p)), MinkPoint(tuple(best_q))),
        evaluations=used,
    )
