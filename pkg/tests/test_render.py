import math

import pytest

from cdops.errors import Unsupported
from cdops.rect import RectMap
from cdops.render import cone_polygons, render_svg
from cdops.shapes import Kind, ball, causally_disjoint


def inside(pt, poly):
    """Even-odd ray casting."""
    x, y = pt
    hit = False
    for (x1, y1), (x2, y2) in zip(poly, poly[1:] + poly[:1]):
        if (y1 > y) != (y2 > y) and x < x1 + (y - y1) * (x2 - x1) / (y2 - y1):
            hit = not hit
    return hit


def boundary(cx, ct, r, count=720):
    return [(cx + r * math.cos(2 * math.pi * i / count), ct + r * math.sin(2 * math.pi * i / count))
            for i in range(count)]


def test_empty_config_axes_only():
    svg = render_svg(2, Kind.BALL, [])
    assert svg.startswith("<svg") and svg.endswith("</svg>\n")
    assert svg.count("<polyline") == 2 and svg.count("<circle") == 1  # axes and unit outline


def test_unit_diamond_is_rotated_square():
    svg = render_svg(2, Kind.DIAMOND, [RectMap(1, (0, 0))])
    assert '<polygon points="360.000,200.000 200.000,40.000 40.000,200.000 200.000,360.000" style="fill:#' in svg


def test_rejects_higher_dimensions():
    with pytest.raises(Unsupported):
        render_svg(3, Kind.BALL, [])


def test_byte_stable():
    maps = [RectMap(0.2, (0.1, -0.5)), RectMap(0.15, (-0.1, 0.5))]
    assert render_svg(2, Kind.BALL, maps, cones=True) == render_svg(2, Kind.BALL, maps, cones=True)


def test_ball_cones_miss_a_disjoint_ball():
    # (x, t) plane: first ball at the origin, second across space
    b1, b2 = ball((0.0, 0.0), 0.25), ball((0.1, 0.9), 0.3)
    assert causally_disjoint(b1, b2).disjoint
    cones = cone_polygons(Kind.BALL, 0.0, 0.0, 0.25)
    assert not any(inside(p, c) for c in cones for p in boundary(0.9, 0.1, 0.3))
    # a timelike-separated ball is hit
    assert any(inside(p, c) for c in cones for p in boundary(0.0, 0.9, 0.1))


def test_ball_cone_tangent_points():
    r = 0.4
    future, past = cone_polygons(Kind.BALL, 0.0, 0.0, r)
    h = r / math.sqrt(2)
    assert future[2] == pytest.approx((h, -h)) and future[-1] == pytest.approx((-h, -h))
    assert past[2] == pytest.approx((h, h)) and past[-1] == pytest.approx((-h, h))
    # rays are null: slope +-1
    for poly in (future, past):
        for far, tip in ((poly[0], poly[-1]), (poly[1], poly[2])):
            assert abs(far[1] - tip[1]) == pytest.approx(abs(far[0] - tip[0]))


def test_diamond_cone_from_vertex():
    future, past = cone_polygons(Kind.DIAMOND, 0.2, 0.1, 0.3)
    assert future[-1] == pytest.approx((0.2, -0.2)) and past[-1] == pytest.approx((0.2, 0.4))
