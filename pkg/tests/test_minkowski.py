import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cdops.errors import DimensionMismatch
from cdops.minkowski import (
    CausalKind,
    MinkPoint,
    PointRelation,
    boost,
    causal_class,
    cone_separation,
    default_tolerance,
    mink_inner,
    points_causally_related,
)

fracs = st.fractions(min_value=-50, max_value=50, max_denominator=60)
floats = st.floats(min_value=-10, max_value=10, allow_nan=False)


def vec(elems, n):
    return st.lists(elems, min_size=n, max_size=n).map(lambda c: MinkPoint(tuple(c)))


@pytest.mark.parametrize("u, expected", [((1, 0), -1), ((1, 1), 0), ((0, 2, 3), 13)])
def test_inner_examples(u, expected):
    assert mink_inner(u, u) == expected


@pytest.mark.parametrize("v, kind, margin", [
    ((1, 0), CausalKind.TIMELIKE, -1),
    ((1, 1), CausalKind.NULL, 0),
    ((0, 1), CausalKind.SPACELIKE, 1),
])
def test_causal_class_examples(v, kind, margin):
    c = causal_class(v)
    assert c.kind is kind and c.margin == margin


@pytest.mark.parametrize("q, rel", [
    ((1, 0), PointRelation.RELATED),
    ((0, 1), PointRelation.UNRELATED),
    ((1, 1), PointRelation.MARGINAL),
])
def test_point_relation_examples(q, rel):
    assert points_causally_related((0, 0), q) is rel


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(vec(fracs, n), vec(fracs, n), vec(fracs, n), fracs, fracs)))
def test_inner_exactly_bilinear_and_symmetric(args):
    u, v, w, a, b = args
    combo = u.scaled(a) + v.scaled(b)
    assert mink_inner(combo, w) == a * mink_inner(u, w) + b * mink_inner(v, w)
    assert mink_inner(u, v) == mink_inner(v, u)
    assert isinstance(mink_inner(u, v), Fraction)


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(vec(floats, n), vec(floats, n))))
def test_point_relation_symmetric(pq):
    p, q = pq
    assert points_causally_related(p, q) is points_causally_related(q, p)


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(vec(floats, n), vec(floats, n))),
       st.floats(-2, 2), st.data())
def test_boost_preserves_interval_and_relation(pq, rapidity, data):
    p, q = pq
    axis = data.draw(st.integers(1, p.dim - 1))
    d = q - p
    bd = boost(q, rapidity, axis) - boost(p, rapidity, axis)
    scale = math.cosh(rapidity) ** 2 * (1 + d.norm() ** 2)
    assert mink_inner(bd, bd) == pytest.approx(mink_inner(d, d), abs=1e-9 * scale)
    # the relation is invariant away from the null band
    if abs(mink_inner(d, d)) > 1e-6 * scale:
        assert points_causally_related(boost(p, rapidity, axis), boost(q, rapidity, axis), 0.0) \
            is points_causally_related(p, q, 0.0)


def test_cone_separation_sign():
    assert cone_separation((0, 0), (2, 1)) == -1
    assert cone_separation((0, 0, 0), (0, 3, 4)) == 5


def test_tolerance_from_environment(monkeypatch):
    monkeypatch.setenv("CDOPS_TOLERANCE", "0.5")
    assert default_tolerance() == 0.5
    assert points_causally_related((0, 0), (1, 1.4)) is PointRelation.MARGINAL
    monkeypatch.delenv("CDOPS_TOLERANCE")
    assert default_tolerance() == 1e-9


def test_point_validation():
    with pytest.raises(ValueError):
        MinkPoint((0.0, math.nan))
    with pytest.raises(DimensionMismatch):
        MinkPoint(())
    with pytest.raises(DimensionMismatch):
        mink_inner((0, 1), (0, 1, 2))


def test_rational_and_float_views():
    p = MinkPoint.of(Fraction(1, 3), Fraction(-2, 7))
    assert p.to_float().to_rational() != p
    assert p.to_float().coords == (1 / 3, -2 / 7)
    assert MinkPoint.origin(3).coords == (0, 0, 0)
