"""Explicit varieties, special orbits, singularity certification and conic fibres."""

from __future__ import annotations

from .catalog import INFINITY, VarietyDef, build
from .checks import igusa_lines_check, q_inf_check, quadric_line_intersection, x_tau_splitting_check
from .orbits import ORBIT_NAMES, OrbitCatalog, orbit_catalog
from .parameters import ramification_points, s_of_tau, special_value_table, t_of_tau
from .singular import (
    NotOnHyperplaneError,
    NotSingularError,
    is_node_at,
    is_singular_at,
    local_hessian_rank,
    singular_orbits,
    singularity_condition_in_t,
)
from .tables import (
    conic_fibre_check,
    igusa_upsilon_check,
    orbit_table_check,
    parameter_table_check,
    s4_covariance_check,
    symbolic_orbit_check,
    verra_pullback_check,
)
from .verra import (
    ConicFiber,
    component_action,
    conic_fiber,
    discriminant_identity_check,
    plane_automorphism,
    verra_form,
    verra_matrices,
)
from .wiman_edge import base_point_check, singular_members_check, wiman_edge_singular_params

__all__ = [
    "INFINITY",
    "ConicFiber",
    "NotOnHyperplaneError",
    "NotSingularError",
    "ORBIT_NAMES",
    "OrbitCatalog",
    "VarietyDef",
    "base_point_check",
    "build",
    "component_action",
    "conic_fiber",
    "conic_fibre_check",
    "discriminant_identity_check",
    "igusa_lines_check",
    "igusa_upsilon_check",
    "is_node_at",
    "is_singular_at",
    "local_hessian_rank",
    "orbit_catalog",
    "orbit_table_check",
    "parameter_table_check",
    "plane_automorphism",
    "q_inf_check",
    "quadric_line_intersection",
    "ramification_points",
    "s4_covariance_check",
    "s_of_tau",
    "singular_members_check",
    "singular_orbits",
    "singularity_condition_in_t",
    "special_value_table",
    "symbolic_orbit_check",
    "t_of_tau",
    "verra_form",
    "verra_matrices",
    "verra_pullback_check",
    "wiman_edge_singular_params",
    "x_tau_splitting_check",
]
