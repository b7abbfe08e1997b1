"""Checks on the subgroup lattice, the outer automorphism and the group actions."""

from __future__ import annotations

import random
import time

from ..report import CheckReport, report
from .actions import act_on_point, galois_involution, normalize, orbit, orbit_stabilizer_holds
from .lattice import brute_force_classes, subgroup_classes
from .named import classify_subgroup, named_subgroups
from .outer import duad_perm, duads, outer_automorphism, syntheme_perm, synthemes
from .perm import Perm
from .s6 import tables
from .subgroup import Subgroup, alternating_group, generate, symmetric_group

EXPECTED_CLASS_COUNT = 56
ORACLE_MAX_ORDER = 24

# cycle types exchanged by an outer automorphism; the other types are fixed
CLASS_SWAPS = {(2, 1, 1, 1, 1): (2, 2, 2), (3, 1, 1, 1): (3, 3), (6,): (3, 2, 1)}


def orders_census() -> dict[int, int]:
    out: dict[int, int] = {}
    for c in subgroup_classes().classes:
        out[c.order] = out.get(c.order, 0) + 1
    return dict(sorted(out.items()))


def subgroup_classes_check(max_order: int = ORACLE_MAX_ORDER) -> CheckReport:
    """56 classes; per-order counts agree with an independent brute-force closure up to ``max_order``."""
    start = time.perf_counter()
    census = orders_census()
    oracle = brute_force_classes(max_order)
    lattice_small = {k: v for k, v in census.items() if k <= max_order}
    s5_like = [c for c in subgroup_classes().classes if c.order == 120]
    ok = (
        sum(census.values()) == EXPECTED_CLASS_COUNT
        and census.get(720) == 1
        and len(s5_like) == 2
        and oracle == lattice_small
    )
    return report(
        "subgroup_classes",
        ok,
        witness={"lattice": lattice_small, "oracle": oracle},
        details={"classes": sum(census.values()), "per_order": census, "oracle_max_order": max_order},
        started=start,
    )


def random_subgroups_check(samples: int = 1000, seed: int = 0) -> CheckReport:
    """Random two-generator subgroups each fall into exactly one catalog class."""
    start = time.perf_counter()
    rng = random.Random(seed)
    t = tables()
    cat = subgroup_classes()
    missing = 0
    hit = set()
    for _ in range(samples):
        gens = [rng.randrange(720) for _ in range(rng.choice((1, 2)))]
        mask = t.closure(gens)
        idx = cat.class_of.get(mask)
        if idx is None:
            missing += 1
        else:
            hit.add(idx)
    return report("random_subgroups_classified", missing == 0, witness={"unclassified": missing},
                  details={"samples": samples, "seed": seed, "classes_hit": len(hit)}, started=start)


def outer_automorphism_check() -> CheckReport:
    start = time.perf_counter()
    alpha = outer_automorphism()
    s6 = tables().perms
    transpositions_ok = all(alpha(duad_perm(d)).cycle_type == (2, 2, 2) for d in duads())
    inner = alpha.is_inner()
    square = alpha.square_conjugator()
    swaps = {}
    for g in s6:
        swaps.setdefault(g.cycle_type, set()).add(alpha(g).cycle_type)
    expected = {**CLASS_SWAPS, **{v: k for k, v in CLASS_SWAPS.items()}}
    class_map_ok = all(len(v) == 1 and next(iter(v)) == expected.get(k, k) for k, v in swaps.items())
    commute_ok = True
    for d in duads():
        a = duad_perm(d)
        for s in synthemes():
            b = syntheme_perm(s)
            before = a * b == b * a
            after = alpha(a) * alpha(b) == alpha(b) * alpha(a)
            commute_ok &= before == after
    ok = transpositions_ok and not inner and square is not None and class_map_ok and commute_ok
    return report(
        "outer_automorphism",
        ok,
        witness={"transpositions_to_222": transpositions_ok, "inner": inner, "square_inner": square is not None,
                 "class_map": class_map_ok, "commuting_preserved": commute_ok},
        details={"class_images": {"".join(map(str, k)): ["".join(map(str, x)) for x in sorted(v)]
                                  for k, v in sorted(swaps.items())},
                 "square_conjugator": square.cycle_notation() if square else None},
        started=start,
    )


def generate_examples_check() -> CheckReport:
    start = time.perf_counter()
    P = Perm.parse
    orders = {
        "S6": generate([P("(1 2)"), P("(1 2 3 4 5 6)")]).order,
        "trivial": generate([]).order,
        "V4": generate([P("(1 2)(3 4)"), P("(1 3)(2 4)")]).order,
    }
    ok = orders == {"S6": 720, "trivial": 1, "V4": 4}
    return report("generate_examples", ok, witness=orders, details=orders, started=start)


def named_subgroups_check() -> CheckReport:
    """Structural facts about the constructed subgroups."""
    start = time.perf_counter()
    named = named_subgroups()
    s5 = classify_subgroup(named["S5"])
    alpha = outer_automorphism()
    bar_s5 = classify_subgroup(Subgroup(alpha(g) for g in named["S5"]))
    a42 = classify_subgroup(named["A4,2"])
    v42 = named["V4,2"]
    v4 = named["V4"]
    first = {Perm([g(i) for i in (1, 2, 3, 4)] + [5, 6]) for g in v42}
    second = {(g(5), g(6)) for g in v42}
    mu5mu4 = named["mu5:mu4"]
    facts = {
        "S5_has_transpositions": "[2]" in s5.census,
        "bar_S5_has_transpositions": "[2]" in bar_s5.census,
        "S5_classes_differ": s5.class_index != bar_s5.class_index,
        "bar_S5_transitive": bar_s5.transitivity_degree >= 1,
        "A4,2_order": a42.order,
        "A4,2_in_A6": a42.in_A6,
        "V4,2_order": v42.order,
        "V4,2_first_projection_is_V4": first == set(v4.elements) and len(first) == v42.order,
        "V4,2_second_projection_onto": second == {(5, 6), (6, 5)},
        "mu5:mu4_order": mu5mu4.order,
    }
    ok = (facts["S5_has_transpositions"] and not facts["bar_S5_has_transpositions"] and facts["S5_classes_differ"]
          and facts["bar_S5_transitive"] and facts["A4,2_order"] == 24 and facts["A4,2_in_A6"]
          and facts["V4,2_order"] == 4 and facts["V4,2_first_projection_is_V4"]
          and facts["V4,2_second_projection_onto"] and facts["mu5:mu4_order"] == 20)
    return report("named_subgroup_structure", ok, witness=facts, details=facts, started=start)


def actions_check(seed: int = 0) -> CheckReport:
    """Orbit sizes, orbit-stabilizer, twisted vs natural on A6, the Galois involution."""
    start = time.perf_counter()
    s6 = symmetric_group(6)
    sizes = {
        "Sigma10": len(orbit(s6, (1, 1, 1, -1, -1, -1))),
        "Upsilon15": len(orbit(s6, (2, 2, -1, -1, -1, -1))),
    }
    alpha = outer_automorphism()
    bar_a5 = Subgroup(alpha(g) for g in alternating_group(6, [1, 2, 3, 4, 5]))
    transitive = len(orbit(bar_a5, (2, 2, -1, -1, -1, -1))) == 15
    stab = all(orbit_stabilizer_holds(s6, p) for p in [(1, 1, 1, -1, -1, -1), (2, 2, -1, -1, -1, -1), (1, -1, 0, 0, 0, 0)])
    rng = random.Random(seed)
    a6 = alternating_group(6)
    agree = True
    for _ in range(20):
        g = rng.choice(a6.elements)
        p = tuple(rng.randint(-5, 5) or 1 for _ in range(7))
        agree &= act_on_point(g, p, "natural") == act_on_point(g, p, "twisted")
    odd = Perm.parse("(1 2)")
    p7 = (1, 2, 3, 4, 5, 6, 7)
    twisted_neg = act_on_point(odd, p7, "twisted", normalized=False)[0] == -1
    sigma_ok = galois_involution(p7) == normalize((-1,) + p7[1:])
    ok = sizes == {"Sigma10": 10, "Upsilon15": 15} and transitive and stab and agree and twisted_neg and sigma_ok
    return report("group_actions", ok,
                  witness={"sizes": sizes, "bar_A5_transitive": transitive, "orbit_stabilizer": stab,
                           "twisted_agrees_on_A6": agree, "twisted_negates_x0": twisted_neg},
                  details=sizes, started=start)
