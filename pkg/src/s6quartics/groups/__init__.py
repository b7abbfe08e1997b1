"""Permutations, subgroups of S6, the outer automorphism and point actions."""

from .actions import act_on_point, galois_involution, normalize, orbit, orbit_stabilizer_holds, stabilizer
from .lattice import brute_force_classes, subgroup_classes, subgroups_up_to_conjugacy
from .named import classify_subgroup, named_subgroups, resolve
from .outer import (
    OuterAut,
    duads,
    outer_automorphism,
    synthemes,
    totals,
)
from .perm import Perm, cycle_type_label, transposition
from .subgroup import GroupError, Subgroup, alternating_group, generate, intersection, symmetric_group

__all__ = [
    "GroupError",
    "OuterAut",
    "Perm",
    "Subgroup",
    "act_on_point",
    "alternating_group",
    "brute_force_classes",
    "classify_subgroup",
    "cycle_type_label",
    "duads",
    "galois_involution",
    "generate",
    "intersection",
    "named_subgroups",
    "normalize",
    "orbit",
    "orbit_stabilizer_holds",
    "outer_automorphism",
    "resolve",
    "stabilizer",
    "subgroup_classes",
    "subgroups_up_to_conjugacy",
    "symmetric_group",
    "synthemes",
    "totals",
    "transposition",
]
