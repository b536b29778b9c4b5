"""Orthogonal categories with one object and their prefactorization operads.

An :class:`OrthoInstance` fixes a dimension, the unit shape (ball or diamond)
whose rectilinear self-embeddings are the morphisms, and the relation deciding
when two morphisms are orthogonal.  A k-ary operation of the associated operad
is a :class:`MultiMorphism`: k self-embeddings whose images are pairwise
orthogonal.  Composition is inherited from :func:`cdops.rect.rect_compose` and
flattened in lexicographic order, and permutations reorder the tuple.

All instances here are single-object, so multimorphisms carry no color labels;
a multi-object instance would attach a list of source objects to each
multimorphism and check it in :func:`multi_compose`.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field

from .errors import (
    ArityMismatch,
    DimensionMismatch,
    InstanceMismatch,
    InvalidPermutation,
    ViolatingPair,
)
from .minkowski import default_tolerance
from .rect import RectMap, rect_compose, rect_image
from .shapes import (
    Kind,
    Status,
    Ternary,
    causally_disjoint,
    contained_in_unit,
    set_interiors_disjoint,
)


class Relation(enum.Enum):
    CAUSALLY_DISJOINT = "causally_disjoint"
    INTERIOR_DISJOINT = "interior_disjoint"


@dataclass(frozen=True)
class OrthoInstance:
    name: str
    dimension: int
    shape_kind: Kind
    relation: Relation
    tolerance: float = field(default_factory=default_tolerance)

    def __post_init__(self):
        minimum = 2 if self.relation is Relation.CAUSALLY_DISJOINT else 1
        if self.dimension < minimum:
            raise ValueError(f"{self.name} needs dimension >= {minimum}")

    def check(self, f: RectMap):
        if f.dim != self.dimension:
            raise DimensionMismatch(f"{self.name} has dimension {self.dimension}, map has {f.dim}")


def is_orthogonal(inst: OrthoInstance, f: RectMap, g: RectMap) -> Ternary:
    inst.check(f)
    inst.check(g)
    a, b = rect_image(f, inst.shape_kind), rect_image(g, inst.shape_kind)
    if inst.relation is Relation.CAUSALLY_DISJOINT:
        return causally_disjoint(a, b, inst.tolerance)
    return set_interiors_disjoint(a, b, inst.tolerance)


def containment(inst: OrthoInstance, f: RectMap) -> Ternary:
    return contained_in_unit(rect_image(f, inst.shape_kind), inst.tolerance)


@dataclass(frozen=True)
class MultiMorphism:
    """A k-ary operation; ``validity`` is the minimum pairwise and containment margin.

    ``pair_margins`` maps ``(i, j)`` with ``i < j`` to the orthogonality margin
    and ``containment_margins[i]`` is the containment margin of map ``i``.
    The empty operation has margin ``+inf``.
    """

    instance: OrthoInstance
    maps: tuple
    validity: Ternary
    pair_margins: dict = field(compare=False, repr=False)
    containment_margins: tuple = field(compare=False, repr=False)

    @property
    def arity(self) -> int:
        return len(self.maps)

    @property
    def margin(self) -> float:
        return self.validity.margin

    def worst(self) -> tuple:
        """Index pair attaining the minimum margin (``(i, i)`` for containment)."""
        cands = [((i, i), m) for i, m in enumerate(self.containment_margins)]
        cands += list(self.pair_margins.items())
        return min(cands, key=lambda c: c[1])[0] if cands else ()


def evaluate(inst: OrthoInstance, maps) -> MultiMorphism:
    """Build a multimorphism and its margins without rejecting violations."""
    maps = tuple(maps)
    for f in maps:
        inst.check(f)
    shapes = [rect_image(f, inst.shape_kind) for f in maps]
    cont = tuple(contained_in_unit(s, inst.tolerance).margin for s in shapes)
    pred = causally_disjoint if inst.relation is Relation.CAUSALLY_DISJOINT else set_interiors_disjoint
    pairs = {}
    for i in range(len(shapes)):
        for j in range(i + 1, len(shapes)):
            pairs[(i, j)] = pred(shapes[i], shapes[j], inst.tolerance).margin
    lowest = min([*cont, *pairs.values()], default=float("inf"))
    return MultiMorphism(inst, maps, Ternary.classify(lowest, inst.tolerance), pairs, cont)


def multi_validate(inst: OrthoInstance, maps) -> MultiMorphism:
    """Validate ``maps`` as an operation of ``inst``; raises :class:`ViolatingPair` if any check fails."""
    mm = evaluate(inst, maps)
    if mm.validity.status is Status.NOT_DISJOINT:
        i, j = mm.worst()
        raise ViolatingPair(i, j, mm.margin)
    return mm


def identity_operation(inst: OrthoInstance, exact: bool = False) -> MultiMorphism:
    return multi_validate(inst, [RectMap.identity(inst.dimension, exact)])


def multi_compose(f: MultiMorphism, gs) -> MultiMorphism:
    """``f(g_1, ..., g_k)`` = ``(f_1 o g_11, f_1 o g_12, ..., f_k o g_kj_k)``."""
    gs = list(gs)
    if len(gs) != f.arity:
        raise ArityMismatch(f"operation of arity {f.arity} given {len(gs)} inputs")
    for g in gs:
        if g.instance != f.instance:
            raise InstanceMismatch(f"{g.instance.name} input to {f.instance.name} operation")
    maps = [rect_compose(fi, gil) for fi, g in zip(f.maps, gs) for gil in g.maps]
    return multi_validate(f.instance, maps)


def _check_permutation(sigma, k: int) -> list:
    sigma = list(sigma)
    if sorted(sigma) != list(range(k)):
        raise InvalidPermutation(f"{sigma} is not a permutation of range({k})")
    return sigma


def multi_permute(f: MultiMorphism, sigma) -> MultiMorphism:
    """Reorder so that slot ``i`` of the result holds ``f.maps[sigma[i]]``."""
    sigma = _check_permutation(sigma, f.arity)
    return evaluate(f.instance, [f.maps[s] for s in sigma])


def block_permutation(sigma, arities) -> list:
    """The permutation of a composite's slots induced by permuting its blocks by ``sigma``."""
    sigma = _check_permutation(sigma, len(arities))
    offsets = [0]
    for a in arities:
        offsets.append(offsets[-1] + a)
    return [offsets[s] + l for s in sigma for l in range(arities[s])]


@dataclass
class HarnessReport:
    name: str
    trials: int
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def perp_stability_harness(inst: OrthoInstance, trials: int, seed: int) -> HarnessReport:
    """Check ``(g o f1 o h1, g o f2 o h2)`` stays orthogonal for strictly orthogonal ``(f1, f2)``.

    Trial ``i`` draws from ``random.Random(seed + i)``; pairs are sampled with
    margin above ``10 * tolerance`` so float noise cannot fake a failure.
    """
    from .sampling import random_orthogonal_pair, random_self_embedding

    if trials < 1:
        raise ValueError("trials must be positive")
    report = HarnessReport(f"perp-stability/{inst.name}", trials)
    for i in range(trials):
        rng = random.Random(seed + i)
        g, h1, h2 = (random_self_embedding(inst, rng) for _ in range(3))
        f1, f2 = random_orthogonal_pair(inst, rng, min_margin=10 * inst.tolerance)
        res = is_orthogonal(inst, rect_compose(g, rect_compose(f1, h1)), rect_compose(g, rect_compose(f2, h2)))
        if res.violated:
            report.violations.append({"seed": seed + i, "margin": res.margin})
    return report


def symmetry_harness(inst: OrthoInstance, trials: int, seed: int) -> HarnessReport:
    from .sampling import random_self_embedding

    report = HarnessReport(f"symmetry/{inst.name}", trials)
    for i in range(trials):
        rng = random.Random(seed + i)
        f, g = random_self_embedding(inst, rng), random_self_embedding(inst, rng)
        if is_orthogonal(inst, f, g) != is_orthogonal(inst, g, f):
            report.violations.append({"seed": seed + i})
    return report
