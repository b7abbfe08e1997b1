"""The closed registry of named checks, in the fixed order reports are emitted."""

from __future__ import annotations

import importlib
import inspect
from dataclasses import dataclass

from ..report import CheckReport, timed


@dataclass(frozen=True)
class Check:
    name: str
    module: str
    function: str
    summary: str

    def resolve(self):
        return getattr(importlib.import_module(f"s6quartics.{self.module}"), self.function)

    def run(self, seed: int = 0) -> CheckReport:
        fn = self.resolve()
        if "seed" in inspect.signature(fn).parameters:
            return timed(self.name, lambda: _as_check(fn(seed=seed), self.name))
        return timed(self.name, lambda: _as_check(fn(), self.name))


def _as_check(result, name: str) -> CheckReport:
    if isinstance(result, CheckReport):
        return result
    return result.as_check(name)  # a TableReport


_ENTRIES = [
    # algebra-backed map identities
    ("igusa_substitution", "maps.verify", "verify_igusa_substitution",
     "the Coble-fourfold parametrization satisfies the Coble and hyperplane equations"),
    ("rho42_lands_in_coble", "maps.verify", "rho_lands_in_coble",
     "the P2xP2 map lands in the Coble fourfold"),
    ("rho42_flipped_lands_in_coble", "maps.verify", "rho_flipped_lands_in_coble",
     "the map with the two plane factors exchanged lands in the Coble fourfold"),
    ("toric_projection_lands_in_cubic", "maps.verify", "toric_lands_in_cubic",
     "the toric projection lands in the Segre-type cubic, with recorded scalar"),
    ("ramification_determinant_form", "maps.verify", "verify_determinant_form",
     "the ramification divisor equals the 3x3 determinant form"),
    ("cubic_involution_is_involution", "maps.verify", "cubic_involution_check",
     "the Cremona involution of the cubic squares to the identity modulo the cubic"),
    ("plane_pair_involution_is_involution", "maps.verify", "plane_pair_involution_check",
     "the plane-pair involution squares to the identity"),
    ("yz_swap_is_involution", "maps.verify", "swap_involution_check",
     "exchanging the y and z coordinates is an involution"),
    ("involution_compatibility", "maps.verify", "verify_involution_compatibility",
     "the two involutions are compatible along the substitution"),
    ("hyperplane_pullbacks", "maps.verify", "verify_hyperplane_pullbacks",
     "all ten hyperplane pullbacks factor as stated"),
    ("burkhardt_factorization", "maps.verify", "verify_burkhardt_factorization",
     "Burkhardt-quartic factorization over Q(sqrt -3)"),
    ("map_catalog_content", "maps.verify", "catalog_content_check",
     "catalog maps are homogeneous with no common component factor"),
    ("s42_induced_embedding", "maps.embedding", "embedding_check",
     "the induced non-standard embedding S4xS2 -> S6 and its intertwining identity"),
    # varieties
    ("x_tau_splitting", "varieties.checks", "x_tau_splitting_check",
     "the tau-pencil splitting identity"),
    ("igusa_singular_along_lines", "varieties.checks", "igusa_lines_check",
     "the Igusa quartic is singular along the 15 lines"),
    ("q_inf_cremona_richmond", "varieties.checks", "q_inf_check",
     "Q_inf misses Upsilon15 and meets each line in two points of Sigma30"),
    ("singular_orbit_table", "varieties.tables", "orbit_table_check",
     "singular catalog orbits along the pencil; every singular point is a node"),
    ("orbit_singularity_in_t", "varieties.tables", "symbolic_orbit_check",
     "the singularity condition at each orbit representative, solved in t"),
    ("igusa_upsilon15_non_nodes", "varieties.tables", "igusa_upsilon_check",
     "on the Igusa quartic the Upsilon15 points are non-nodal singularities"),
    ("verra_pullback_equalities", "varieties.tables", "verra_pullback_check",
     "the two Verra forms are pullbacks of x0 and the sum of squares"),
    ("verra_discriminant_identity", "varieties.verra", "discriminant_identity_check",
     "12 det(q0 + tau q_inf) identity"),
    ("verra_s4_covariance", "varieties.tables", "s4_covariance_check",
     "the plane S4 preserves the pencil up to tau -> -tau"),
    ("conic_fibre_corank", "varieties.tables", "conic_fibre_check",
     "corank-one conic fibres over (0:1:1) and the action on their components"),
    ("tau_parameter_table", "varieties.tables", "parameter_table_check",
     "exact s(tau), t(tau) values, ramification and multiplicities"),
    ("wiman_edge_base_points", "varieties.wiman_edge", "base_point_check",
     "the four base points are double points of both sextics"),
    ("wiman_edge_singular_members", "varieties.wiman_edge", "singular_members_check",
     "singular members of the Wiman-Edge pencil by elimination"),
    # Cremona-Richmond configuration
    ("cr_incidence_15_3", "crconfig.combinatorics", "configuration_check",
     "duad/syntheme incidence is a (15_3) configuration; commuting criterion agrees"),
    ("cr_self_duality", "crconfig.combinatorics", "self_duality_check",
     "the outer automorphism exchanges points and lines"),
    ("cr_a5_transitivity", "crconfig.combinatorics", "a5_transitivity_check",
     "orbit structure of the A5 subgroups on points and lines"),
    ("cr_realization", "crconfig.realization", "realization_check",
     "the explicit points in P4 realize the configuration"),
    ("cr_line_intersections", "crconfig.realization", "intersections_check",
     "lines meet exactly when their synthemes share a duad"),
    ("cr_jail_decompositions", "crconfig.jail", "jail_check",
     "ten jail decompositions with span ranks 4 and 5"),
    ("cr_jail_hyperplanes_s6_stable", "crconfig.jail", "jail_hyperplanes_stable_check",
     "the ten jail hyperplanes form one S6-orbit"),
    ("cr_uniqueness_transform", "crconfig.uniqueness", "uniqueness_transform_check",
     "the normalizing 6x5 matrix maps the normalized points onto the duad points"),
    ("cr_igusa_uniqueness", "crconfig.uniqueness", "igusa_uniqueness_check",
     "quartics singular along the 15 lines: a one-dimensional space spanned by the Igusa quartic"),
    # groups
    ("generate_examples", "groups.checks", "generate_examples_check",
     "orders of small generated groups"),
    ("outer_automorphism", "groups.checks", "outer_automorphism_check",
     "the outer automorphism from synthematic totals"),
    ("named_subgroup_structure", "groups.checks", "named_subgroups_check",
     "structure of the named subgroups"),
    ("group_actions", "groups.checks", "actions_check",
     "natural and twisted actions, orbit sizes, the Galois involution"),
    ("subgroup_classes", "groups.checks", "subgroup_classes_check",
     "56 conjugacy classes of subgroups, cross-checked by brute force"),
    ("random_subgroups_classified", "groups.checks", "random_subgroups_check",
     "random subgroups fall into catalog classes"),
    # representations
    ("sn_character_orthogonality", "reps.checks", "orthogonality_check",
     "Murnaghan-Nakayama tables satisfy row and column orthogonality"),
    ("a5_character_table", "reps.checks", "a5_table_check",
     "the A5 character table over Q(sqrt 5)"),
    ("outer_twist_fixed_points", "reps.checks", "outer_twist_check",
     "the outer twist on S6 irreducibles"),
    ("frobenius_reciprocity", "reps.checks", "frobenius_reciprocity_check",
     "induction and restriction are adjoint"),
    ("restriction_examples", "reps.checks", "restriction_examples_check",
     "sample restrictions and inductions"),
    ("cubic_invariant_unique", "reps.checks", "cubic_invariant_check",
     "one invariant cubic on the 5-dimensional S5-representation"),
    ("pic_quintic_del_pezzo", "reps.checks", "pic_representation_check",
     "S5 acting on Pic of the quintic del Pezzo surface"),
    ("class_group_dimensions", "reps.checks", "class_group_dimensions_check",
     "class-group character degrees"),
    ("invariant_rank_examples", "reps.checks", "invariant_rank_examples_check",
     "sample invariant ranks"),
    # table reproductions
    ("table_thm3_1", "cli.tables", "singular_orbits_table", "table thm3.1"),
    ("table_lemma3_5", "cli.tables", "pencil_rank_table", "table lemma3.5"),
    ("table_tau_values", "cli.tables", "tau_values_table", "table tau_values"),
    ("table_thm5_7", "cli.tables", "class_group_table", "table thm5.7"),
    ("table_cor5_3", "cli.tables", "rank_one_table", "table cor5.3"),
    ("table_cor5_6", "cli.tables", "rank_two_table", "table cor5.6"),
    ("table_lemma5_8", "cli.tables", "s6_irreducible_table", "table lemma5.8"),
    ("table_lemma5_10", "cli.tables", "a5_restriction_table", "table lemma5.10"),
    ("table_cor4_4", "cli.tables", "induced_a5_table", "table cor4.4"),
]

REGISTRY: tuple[Check, ...] = tuple(Check(*e) for e in _ENTRIES)
BY_NAME: dict[str, Check] = {c.name: c for c in REGISTRY}


def check_names() -> list[str]:
    return [c.name for c in REGISTRY]


def select(names: list[str]) -> list[Check]:
    """Checks for the given names (``all`` = everything), in registry order.

    Raises KeyError listing every unknown name, before anything runs.
    """
    if not names or "all" in names:
        return list(REGISTRY)
    unknown = [n for n in names if n not in BY_NAME]
    if unknown:
        raise KeyError(", ".join(unknown))
    wanted = set(names)
    return [c for c in REGISTRY if c.name in wanted]


def run_by_name(name: str, seed: int = 0) -> dict:
    """Worker entry point: run one check and return its JSON record."""
    return BY_NAME[name].run(seed).to_json(timing=True)
