from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from s6quartics.algebra import proportionality_factor
from s6quartics.maps import (
    MAPS,
    catalog_content_check,
    coble_resolution,
    embedding_check,
    get_map,
    has_common_factor,
    ramification_determinant,
    swap_map,
    verify_burkhardt_factorization,
    verify_determinant_form,
    verify_hyperplane_pullbacks,
    verify_igusa_substitution,
    verify_involution_compatibility,
    verify_lands_in,
)
from s6quartics.maps import verify
from s6quartics.maps.verify import hyperplane_pullback
from s6quartics.varieties import build
from s6quartics.varieties.catalog import UV_RING


def test_coble_resolution_lands_in_coble_for_both_signs():
    Y = build("coble")
    assert verify_lands_in(coble_resolution(), Y).passed
    assert verify_lands_in(coble_resolution(x0_sign=-1), Y).passed


def test_toric_projection_lands_in_perazzo_cubic():
    assert verify_lands_in(get_map("toric_projection"), build("perazzo")).passed


def test_swap_negates_determinant_form():
    d = ramification_determinant()
    assert swap_map().pullback(d) == -d


@pytest.mark.parametrize("triple, u_factor, v_factor", [
    ((1, 2, 4), "u1 - u3", "v2"),
    ((2, 3, 6), "u2", "v1 - v3"),
])
def test_hyperplane_pullback_factors(triple, u_factor, v_factor):
    f = hyperplane_pullback(triple)
    assert proportionality_factor(f, UV_RING.parse(u_factor) * UV_RING.parse(v_factor)) is not None


def test_hyperplane_123_singular_at_diagonal_point():
    f = hyperplane_pullback((1, 2, 3))
    p = (1, 1, 1, 1, 1, 1)
    assert f.evaluate(p) == 0
    assert all(g.evaluate(p) == 0 for g in f.gradient())


@pytest.mark.parametrize("name", list(MAPS))
def test_catalog_maps_homogeneous_without_common_factor(name):
    m = get_map(name)
    assert m.is_homogeneous()
    for block in m.block_list:
        assert not has_common_factor([m.components[i] for i in block])


def test_common_factor_detected():
    u1, u2 = UV_RING.gen("u1"), UV_RING.gen("u2")
    assert has_common_factor([u1 * u2, u1 * u1])
    assert not has_common_factor([u1, u2])


@pytest.mark.parametrize("check", [
    verify_igusa_substitution,
    verify_involution_compatibility,
    verify_determinant_form,
    verify_hyperplane_pullbacks,
    verify_burkhardt_factorization,
    verify.rho_lands_in_coble,
    verify.rho_flipped_lands_in_coble,
    verify.toric_lands_in_cubic,
    verify.cubic_involution_check,
    verify.plane_pair_involution_check,
    verify.swap_involution_check,
    catalog_content_check,
    embedding_check,
])
def test_map_checks_pass(check):
    rep = check()
    assert rep.passed, rep.witness


@given(st.fractions(min_value=-9, max_value=9, max_denominator=5).filter(lambda c: c != 0))
def test_lands_in_invariant_under_rescaling(c):
    Y = build("coble")
    assert verify_lands_in(coble_resolution().scaled(c), Y).passed


@given(st.fractions(min_value=-9, max_value=9, max_denominator=5).filter(lambda c: c != 0))
def test_perturbed_map_fails_to_land(c):
    m = coble_resolution()
    comps = list(m.components)
    comps[1] = comps[1] + UV_RING.gen("u1") * UV_RING.gen("v1") * Fraction(c)
    broken = type(m)(m.name, m.source, m.target, tuple(comps), m.blocks, m.weights)
    assert not verify_lands_in(broken, build("coble")).passed
