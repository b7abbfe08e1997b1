from __future__ import annotations

import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from s6quartics.groups import (
    Perm,
    act_on_point,
    alternating_group,
    duads,
    galois_involution,
    generate,
    named_subgroups,
    normalize,
    orbit,
    orbit_stabilizer_holds,
    outer_automorphism,
    subgroup_classes,
    symmetric_group,
    synthemes,
    totals,
)
from s6quartics.groups import checks
from s6quartics.groups.outer import duad_perm, syntheme_perm

S6 = symmetric_group(6)
perms = st.permutations(range(1, 7)).map(Perm)


def test_generate_small_examples():
    assert generate([Perm.parse("(1 2)"), Perm.parse("(1 2 3 4 5 6)")]).order == 720
    assert generate([]).order == 1
    assert generate([Perm.parse("(1 2)(3 4)"), Perm.parse("(1 3)(2 4)")]).order == 4


def test_cycle_notation_round_trip():
    g = Perm.parse("(1 2)(3 4 5)")
    assert Perm.parse(g.cycle_notation()) == g
    assert g.cycle_type == (3, 2, 1)


def test_combinatorics_of_duads_synthemes_totals():
    assert len(duads()) == math.comb(6, 2)
    assert len(synthemes()) == 15
    assert len(totals()) == 6
    for t in totals():
        covered = [d for s in t for d in s]
        assert sorted(covered) == sorted(duads())


def test_two_classes_of_order_120():
    cat = subgroup_classes()
    assert len(cat.classes) == 56
    assert sum(1 for c in cat.classes if c.order == 120) == 2


def test_outer_automorphism_images():
    alpha = outer_automorphism()
    assert alpha(Perm.parse("(1 2)")).cycle_type == (2, 2, 2)
    assert not alpha.is_inner()
    assert alpha.square_conjugator() is not None
    threes = [g for g in S6 if g.cycle_type == (3, 1, 1, 1)]
    assert sorted({alpha(g).cycle_type for g in threes}) == [(3, 3)]
    assert len({alpha(g) for g in threes}) == len(threes) == 40


def test_commuting_relation_preserved_on_all_duad_syntheme_pairs():
    alpha = outer_automorphism()
    for d, s in itertools.product(duads(), synthemes()):
        a, b = duad_perm(d), syntheme_perm(s)
        assert (a * b == b * a) == (alpha(a) * alpha(b) == alpha(b) * alpha(a))


def test_orbit_sizes():
    assert len(orbit(S6, (1, 1, 1, -1, -1, -1))) == 10
    assert len(orbit(S6, (2, 2, -1, -1, -1, -1))) == 15


def test_named_subgroup_orders():
    named = named_subgroups()
    assert named["A4,2"].order == 24 and named["A4,2"].in_alternating()
    # V4,2 = graph of a surjection V4 -> S2 inside S4 x S2; its order is |V4| = 4
    assert named["V4,2"].order == 4
    assert named["mu5:mu4"].order == 20


def test_twisted_action_negates_x0_for_transposition():
    p = (1, 2, 3, 4, 5, 6, 7)
    assert act_on_point(Perm.parse("(1 2)"), p, "twisted", normalized=False)[0] == -1
    assert galois_involution(p) == normalize((-1, 2, 3, 4, 5, 6, 7))


@pytest.mark.parametrize("check", [
    checks.outer_automorphism_check,
    checks.named_subgroups_check,
    checks.actions_check,
    checks.generate_examples_check,
])
def test_group_checks_pass(check):
    rep = check()
    assert rep.passed, rep.witness


# -- properties -------------------------------------------------------------


@given(st.lists(perms, min_size=0, max_size=2))
def test_generated_subgroup_axioms(gens):
    H = generate(gens)
    assert 720 % H.order == 0
    els = set(H.elements)
    for g in list(els)[:20]:
        assert g.inverse() in els
        for h in list(els)[:20]:
            assert g * h in els


@given(st.lists(perms, min_size=1, max_size=2),
       st.tuples(*[st.integers(-2, 2)] * 6))
def test_orbit_stabilizer(gens, p):
    if not any(p):
        p = (1, 0, 0, 0, 0, 0)
    assert orbit_stabilizer_holds(generate(gens), p)


A6 = alternating_group(6)


@given(st.sampled_from(A6.elements), st.tuples(*[st.integers(-5, 5)] * 7))
def test_twisted_equals_natural_on_a6(g, p):
    if not any(p):
        p = (1,) * 7
    assert act_on_point(g, p, "natural") == act_on_point(g, p, "twisted")


@given(st.lists(perms, min_size=1, max_size=2))
def test_every_generated_subgroup_has_exactly_one_class(gens):
    cat = subgroup_classes()
    H = generate(gens)
    hits = [c.index for c in cat.classes if c.order == H.order and cat.classify(H) == c.index]
    assert len(hits) == 1


def test_random_subgroups_check():
    rep = checks.random_subgroups_check(samples=1000, seed=0)
    assert rep.passed


def test_subgroup_classes_match_brute_force_oracle():
    rep = checks.subgroup_classes_check()
    assert rep.passed, rep.witness
