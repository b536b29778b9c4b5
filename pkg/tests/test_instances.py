import math
import random

import pytest
from hypothesis import given, strategies as st

from cdops.errors import ViolatingPair
from cdops.instances import (
    by_name,
    cd,
    cdiam,
    diam,
    disc,
    embed_then_forget,
    epsilon_embed,
    epsilon_preimage,
    forget_omega,
    in_epsilon_image,
)
from cdops.ortho import identity_operation, multi_compose, multi_validate
from cdops.rect import RectMap
from cdops.sampling import random_multimorphism
from cdops.shapes import Kind, Status

SQ2 = math.sqrt(2)


def test_identity_embeds_to_inscribed_ball():
    out = epsilon_embed(identity_operation(disc(1)))
    (f,) = out.maps
    assert out.instance == cd(2)
    assert f.scale == pytest.approx(1 / (2 * SQ2))
    assert f.translate.coords == (0, 0)
    assert epsilon_embed(identity_operation(disc(2)), Kind.DIAMOND).maps[0].scale == 0.5


def test_two_interval_example():
    phi = multi_validate(disc(1), [RectMap(0.4, (-0.5,)), RectMap(0.4, (0.5,))])
    out = epsilon_embed(phi)
    assert [f.scale for f in out.maps] == pytest.approx([0.4 / (2 * SQ2)] * 2)
    assert [f.translate.coords for f in out.maps] == [(0, -0.25), (0, 0.25)]
    assert out.pair_margins[(0, 1)] == pytest.approx(0.1)
    assert out.validity.disjoint


def test_empty_and_tangent():
    assert epsilon_embed(multi_validate(disc(2), [])).arity == 0
    tangent = multi_validate(disc(1), [RectMap(0.5, (-0.5,)), RectMap(0.5, (0.5,))])
    for kind in Kind:
        out = epsilon_embed(tangent, kind)
        assert out.pair_margins[(0, 1)] == 0
        assert out.validity.status is Status.MARGINAL


def test_rejects_wrong_source():
    with pytest.raises(ValueError):
        epsilon_embed(identity_operation(cd(2)))
    with pytest.raises(ValueError):
        forget_omega(identity_operation(disc(2)))


@given(st.integers(2, 4), st.integers(1, 5), st.integers(0, 10**6), st.sampled_from(list(Kind)))
def test_embedding_halves_centers_and_margins(n, k, seed, kind):
    phi = random_multimorphism(disc(n - 1), k, random.Random(seed), min_margin=1e-6)
    psi = epsilon_embed(phi, kind)
    assert psi.validity.disjoint
    for f, g in zip(phi.maps, psi.maps):
        assert g.translate.t == 0
        assert g.translate.x == tuple(c / 2 for c in f.translate.coords)
    for ij, m in phi.pair_margins.items():
        assert psi.pair_margins[ij] == pytest.approx(m / 2, abs=1e-12)
    assert in_epsilon_image(psi)
    back = epsilon_preimage(psi)
    assert all(a.is_close(b, 1e-12) for a, b in zip(back.maps, phi.maps))


def test_not_in_image():
    assert not in_epsilon_image(multi_validate(cd(2), [RectMap(0.1, (0.2, 0))]))
    assert not in_epsilon_image(multi_validate(cd(2), [RectMap(0.3, (0, 0.1))]))


def test_epsilon_is_not_a_strict_operad_map():
    # the identity goes to a shrunken ball, not to the identity
    assert epsilon_embed(identity_operation(disc(1))).maps != identity_operation(cd(2)).maps
    # and composites are not preserved: scales compose as r/(2 sqrt 2) vs (r/(2 sqrt 2))^2-like
    phi = multi_validate(disc(1), [RectMap(0.4, (-0.5,)), RectMap(0.4, (0.5,))])
    psi = multi_validate(disc(1), [RectMap(0.5, (0.0,))])
    lhs = epsilon_embed(multi_compose(psi, [phi]))
    rhs = multi_compose(epsilon_embed(psi), [epsilon_embed(phi)])
    assert not all(a.is_close(b, 1e-9) for a, b in zip(lhs.maps, rhs.maps))


def test_omega_examples():
    pair = multi_validate(cd(2), [RectMap(0.1, (0, -0.5)), RectMap(0.1, (0, 0.5))])
    out = forget_omega(pair)
    assert out.instance == disc(2)
    assert out.pair_margins[(0, 1)] == pytest.approx(0.8)
    assert pair.pair_margins[(0, 1)] == pytest.approx(1 - 0.2 * SQ2)
    assert forget_omega(multi_validate(cd(3), [])).arity == 0
    assert forget_omega(multi_validate(cdiam(2), [RectMap(0.3, (0.1, 0))])).instance == diam(2)
    assert embed_then_forget(identity_operation(disc(1))).instance == disc(2)


@given(st.sampled_from([cd, cdiam]), st.integers(2, 4), st.integers(1, 5), st.integers(0, 10**6))
def test_omega_sound(make, n, k, seed):
    psi = random_multimorphism(make(n), k, random.Random(seed))
    out = forget_omega(psi)
    for ij, m in psi.pair_margins.items():
        assert out.pair_margins[ij] >= m


def test_catalog():
    assert by_name("cd", 3) == cd(3)
    assert by_name("diam", 2).shape_kind is Kind.DIAMOND
    assert cd(2, 1e-6).tolerance == 1e-6


def test_overlapping_input_rejected():
    with pytest.raises(ViolatingPair):
        epsilon_embed(multi_validate(disc(1), [RectMap(0.5, (-0.5,)), RectMap(0.5, (0.3,))]))
