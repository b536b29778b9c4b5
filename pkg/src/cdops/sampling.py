"""Seeded random generators for maps and operations; all draws go through a ``random.Random``."""
from __future__ import annotations

import math
import random

from .errors import SamplingExhausted
from .minkowski import MinkPoint
from .ortho import OrthoInstance, evaluate, is_orthogonal
from .rect import RectMap
from .shapes import Kind

DEFAULT_ATTEMPTS = 2000
PLACEMENT_TRIES = 200


def _point_in_unit(kind: Kind, n: int, bound: float, rng: random.Random) -> tuple:
    """Uniform point of the ball (or diamond) of radius ``bound`` about 0, by rejection."""
    while True:
        c = [rng.uniform(-bound, bound) for _ in range(n)]
        if kind is Kind.BALL:
            g = math.sqrt(sum(v * v for v in c))
        else:
            g = abs(c[0]) + math.sqrt(sum(v * v for v in c[1:]))
        if g <= bound:
            return tuple(c)


def random_self_embedding(inst: OrthoInstance, rng: random.Random, rmin: float = 0.1, rmax: float = 1.0) -> RectMap:
    """A map whose image lies in the unit shape."""
    r = rng.uniform(rmin, rmax)
    c = _point_in_unit(inst.shape_kind, inst.dimension, 1.0 - r, rng)
    return RectMap(r, MinkPoint(c))


def random_orthogonal_pair(inst: OrthoInstance, rng: random.Random, min_margin: float = 0.0,
                           attempts: int = DEFAULT_ATTEMPTS) -> tuple[RectMap, RectMap]:
    for _ in range(attempts):
        f = random_self_embedding(inst, rng, 0.02, 0.45)
        g = random_self_embedding(inst, rng, 0.02, 0.45)
        if is_orthogonal(inst, f, g).margin > min_margin:
            return f, g
    raise SamplingExhausted(f"no orthogonal pair with margin > {min_margin} in {attempts} attempts")


def default_radius_range(inst: OrthoInstance, k: int) -> tuple[float, float]:
    rmax = min(0.6, 0.9 / max(k, 1))
    return 0.2 * rmax, rmax


def random_multimorphism(inst: OrthoInstance, k: int, rng: random.Random, min_margin: float = 0.0,
                         attempts: int = DEFAULT_ATTEMPTS, radius_range: tuple | None = None):
    """Rejection-sample a k-ary operation whose overall margin is at least ``min_margin``.

    Maps are placed one at a time; each placement gets ``PLACEMENT_TRIES``
    tries and a failed placement restarts the whole configuration, up to
    ``attempts`` restarts.
    """
    if k < 0 or min_margin < 0:
        raise ValueError("k and min_margin must be non-negative")
    rmin, rmax = radius_range or default_radius_range(inst, k)
    for _ in range(attempts):
        maps = []
        for _ in range(k):
            for _ in range(PLACEMENT_TRIES):
                f = random_self_embedding(inst, rng, rmin, rmax)
                if evaluate(inst, [f]).margin >= min_margin and all(
                    is_orthogonal(inst, f, g).margin >= min_margin for g in maps
                ):
                    maps.append(f)
                    break
            else:
                break
        if len(maps) == k:
            return evaluate(inst, maps)
    raise SamplingExhausted(f"could not place {k} maps with margin {min_margin} on {inst.name}")
