from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from s6quartics.algebra import QuadraticNumber, divide
from s6quartics.varieties import (
    build,
    conic_fiber,
    is_node_at,
    is_singular_at,
    local_hessian_rank,
    orbit_catalog,
    s_of_tau,
    t_of_tau,
    wiman_edge_singular_params,
)
from s6quartics.varieties import checks as vchecks
from s6quartics.varieties import tables
from s6quartics.varieties.parameters import discriminant_set_tau
from s6quartics.varieties.verra import perm_sign, plane_s4
from s6quartics.varieties.wiman_edge import base_point_check, singular_members_check

F = Fraction
DISCRIMINANT_SET = {F(1, 4), F(1, 2), F(1, 6), F(7, 10)}


def test_igusa_is_the_quarter_member():
    assert build("X_t", t=F(1, 4)).hypersurface == build("igusa").hypersurface


def test_singular_examples():
    X1, Xh, Xs = build("X_t", t=1), build("X_t", t=F(1, 2)), build("X_t", t=F(1, 6))
    reps = orbit_catalog().representatives
    assert is_singular_at(X1, reps["Sigma30"])
    assert is_singular_at(Xh, (1, -1, 0, 0, 0, 0))
    assert not is_singular_at(Xs, (1, -1, 0, 0, 0, 0))
    assert is_singular_at(build("X_t", t=F(7, 10)), (5, -1, -1, -1, -1, -1))
    assert is_node_at(Xh, reps["Sigma30"])
    assert is_node_at(Xs, reps["Sigma10"])


def test_cremona_richmond_line_is_non_isolated_on_igusa():
    X = build("igusa")
    # the line of the syntheme 12|34|56: x1 = x2, x3 = x4, x5 = x6 inside the hyperplane
    a, b = (1, 1, -1, -1, 0, 0), (0, 0, 1, 1, -1, -1)
    for lam in (1, 2, -3):
        p = tuple(x + lam * y for x, y in zip(a, b))
        assert is_singular_at(X, p)
        assert local_hessian_rank(X, p) <= 3


def test_orbit_catalog_has_76_points():
    sizes = orbit_catalog().sizes()
    assert sizes == {"Sigma6": 6, "Sigma10": 10, "Sigma15": 15, "Sigma30": 30, "Upsilon15": 15}
    assert sum(sizes.values()) == 76


@pytest.mark.parametrize("t", tables.WITNESS_PARAMETERS)
def test_singular_orbits_positive_and_negative(t):
    want = set(tables.expected_singular_orbits()[F(t)])
    status = tables.orbit_status(t)
    for name, row in status.items():
        assert row["singular"] == (row["points"] if name in want else 0)
        assert row["nodes"] == row["singular"]


def test_special_values():
    s5 = QuadraticNumber.sqrt(5)
    assert t_of_tau(divide(3, s5)) == F(7, 10)
    # the value table lists this column as "-+3/sqrt(5)": the upper sign, tau = -3/sqrt 5,
    # carries s = -1/(5 sqrt 5)
    assert s_of_tau(divide(-3, s5)) == divide(-1, 5 * s5)
    assert s_of_tau(divide(3, s5)) == divide(1, 5 * s5)
    for tau in (1, -1):
        assert s_of_tau(tau) == 0 and t_of_tau(tau) == F(1, 2)


def test_t_maps_discriminant_set_onto_discriminant_set():
    assert {t_of_tau(x) for x in discriminant_set_tau()} == DISCRIMINANT_SET


def test_conic_fibres():
    assert conic_fiber(0, (0, 1, 1)).rank == 2
    fib = conic_fiber(1, (0, 1, 1))
    third = F(1, 3)
    assert [list(r) for r in fib.matrix.entries] == [[2 * third, third, -2 * third],
                                                     [third, 2 * third, -third],
                                                     [-2 * third, -third, 2 * third]]
    assert conic_fiber(2, (1, 2, 5)).rank == 3


def test_wiman_edge_factors():
    got = sorted(str(f) for f in wiman_edge_singular_params())
    assert got == sorted(["s", "125*s^2 - 1", "3*s^2 + 1"])


@pytest.mark.parametrize("check", [
    vchecks.q_inf_check,
    vchecks.x_tau_splitting_check,
    vchecks.igusa_lines_check,
    tables.orbit_table_check,
    tables.symbolic_orbit_check,
    tables.igusa_upsilon_check,
    tables.conic_fibre_check,
    tables.verra_pullback_check,
    tables.s4_covariance_check,
    tables.parameter_table_check,
    base_point_check,
    singular_members_check,
])
def test_variety_checks_pass(check):
    rep = check()
    assert rep.passed, rep.witness


def test_parameter_and_orbit_table_reports():
    assert tables.parameter_value_table_report().match
    assert tables.singular_orbit_table_report().match


# -- properties -------------------------------------------------------------

coords = st.integers(-6, 6)
taus = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@given(st.tuples(coords, coords, coords), taus, st.integers(1, 5))
def test_conic_rank_invariant_under_rescaling(u, tau, k):
    assume(any(u))
    assert conic_fiber(tau, u).rank == conic_fiber(tau, tuple(k * x for x in u)).rank


@given(st.tuples(coords, coords, coords), taus, st.sampled_from(plane_s4()))
def test_conic_rank_covariant_under_plane_s4(u, tau, elem):
    assume(any(u))
    sigma, g = elem
    gu = tuple(g.apply(list(u)))
    assert conic_fiber(tau, gu).rank == conic_fiber(perm_sign(sigma) * tau, u).rank
