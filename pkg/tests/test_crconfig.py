from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from s6quartics.algebra import rank_of_vectors
from s6quartics.crconfig import (
    a5_transitivity_check,
    as_duad,
    as_syntheme,
    commuting_incidence,
    configuration_check,
    decomposition,
    igusa_uniqueness_check,
    igusa_uniqueness_kernel,
    incidence,
    incidence_matrix,
    intersections_check,
    jail_check,
    jail_decompositions,
    jail_hyperplanes_stable_check,
    realization_check,
    realize,
    self_duality_check,
    transform_images,
    uniqueness_transform_check,
)
from s6quartics.groups import Perm, duads, synthemes
from s6quartics.groups.outer import act_on_duad, act_on_syntheme


def test_incidence_example():
    G = as_syntheme(((1, 2), (3, 4), (5, 6)))
    assert incidence(as_duad((1, 2)), G)
    assert not incidence(as_duad((1, 3)), G)


def test_incidence_matrix_is_15_3():
    M = incidence_matrix()
    assert len(M) == 15 and all(len(r) == 15 for r in M)
    assert all(sum(r) == 3 for r in M)
    assert all(sum(r[j] for r in M) == 3 for j in range(15))


def test_geometric_incidence_equals_combinatorial():
    assert realize().geometric_incidence_matrix() == incidence_matrix()


def test_commuting_criterion_on_all_pairs():
    pairs = [(I, G) for I in duads() for G in synthemes()]
    assert len(pairs) == 225
    assert all(commuting_incidence(I, G) == incidence(I, G) for I, G in pairs)


def test_identity_bijection_does_not_preserve_incidence():
    # matching duads and synthemes by list position is not a duality
    D, S = duads(), synthemes()
    assert sum(incidence(D[i], S[i]) for i in range(15)) < 15


def test_ten_jail_decompositions():
    decs = jail_decompositions()
    assert len(decs) == 10
    d = decomposition((1, 2, 3))
    assert d.hyperplane == [1, 1, 1, 0, 0, 0]
    R = realize()
    for I in d.jail_points:
        assert sum(R.points[I][:3]) == 0
    # jail spans a hyperplane (rank 4), the bipartite remainder spans P^4 (rank 5)
    assert rank_of_vectors([R.points[I] for I in d.jail_points]) == 4
    assert rank_of_vectors([R.points[I] for I in d.bipartite_points] + [R.points[I] for I in d.jail_points]) == 5


def test_bipartite_lines_meet_jail_once():
    d = decomposition((1, 2, 3))
    for G in d.bipartite_lines:
        assert sum(1 for I in d.jail_points if incidence(I, G)) == 1


def test_normalizing_matrix_sends_p5_to_p12():
    images = transform_images()
    assert images["P5"] == (1, 2)
    assert all(v is not None for v in images.values())
    assert len(set(images.values())) == 15


def test_singularity_system_shape_and_kernel():
    k = igusa_uniqueness_kernel()
    assert (k["rows"], k["columns"]) == (300, 70)
    assert k["kernel_dimension"] == 1
    assert k["proportional_to_igusa"]


@pytest.mark.xfail(strict=True, reason="dropping one line still leaves a one-dimensional kernel "
                                        "(recorded in the decision ledger)")
def test_relaxed_system_has_larger_kernel():
    R = realize()
    dropped = sorted(R.lines)[0]
    relaxed = igusa_uniqueness_kernel([G for G in R.lines if G != dropped])
    assert relaxed["kernel_dimension"] > 1


@pytest.mark.parametrize("check", [
    configuration_check,
    self_duality_check,
    a5_transitivity_check,
    realization_check,
    intersections_check,
    jail_check,
    jail_hyperplanes_stable_check,
    uniqueness_transform_check,
    igusa_uniqueness_check,
])
def test_cr_checks_pass(check):
    rep = check()
    assert rep.passed, rep.witness


# -- properties -------------------------------------------------------------


@given(st.permutations(range(1, 7)).map(Perm))
def test_incidence_is_s6_invariant(g):
    for I in duads():
        for G in synthemes():
            assert incidence(I, G) == incidence(act_on_duad(g, I), act_on_syntheme(g, G))


@given(st.permutations(range(1, 7)).map(Perm))
def test_jail_hyperplane_set_is_s6_stable(g):
    hs = {tuple(d.hyperplane) for d in jail_decompositions()}
    moved = set()
    for h in hs:
        image = [0] * 6
        for i, c in enumerate(h, start=1):
            image[g(i) - 1] = c
        moved.add(tuple(image))
    # a hyperplane sum_{K0} x = 0 equals sum_{K1} x = 0 on sum x = 0
    canon = lambda h: min(h, tuple(1 - c for c in h))  # noqa: E731
    assert {canon(h) for h in moved} == {canon(h) for h in hs}
