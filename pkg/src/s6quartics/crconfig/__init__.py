"""The Cremona–Richmond configuration (15_3) of points and lines in P^4."""

from __future__ import annotations

from .combinatorics import (
    a5_transitivity_check,
    as_duad,
    as_syntheme,
    commuting_incidence,
    configuration_check,
    incidence,
    incidence_matrix,
    orbit_counts,
    self_duality_check,
)
from .jail import JailDecomposition, decomposition, jail_check, jail_decompositions, jail_hyperplanes_stable_check
from .realization import (
    CRRealization,
    duad_point,
    intersection_point,
    intersections_check,
    line_equations,
    line_intersections,
    realization_check,
    realize,
)
from .uniqueness import (
    NORMALIZED_POINTS,
    TRANSFORM,
    igusa_uniqueness_check,
    igusa_uniqueness_kernel,
    kernel_dimension_profile,
    transform_images,
    uniqueness_transform_check,
)

__all__ = [
    "CRRealization",
    "JailDecomposition",
    "NORMALIZED_POINTS",
    "TRANSFORM",
    "a5_transitivity_check",
    "as_duad",
    "as_syntheme",
    "commuting_incidence",
    "configuration_check",
    "decomposition",
    "duad_point",
    "igusa_uniqueness_check",
    "igusa_uniqueness_kernel",
    "incidence",
    "incidence_matrix",
    "intersection_point",
    "intersections_check",
    "jail_check",
    "jail_decompositions",
    "jail_hyperplanes_stable_check",
    "line_equations",
    "line_intersections",
    "orbit_counts",
    "realization_check",
    "realize",
    "self_duality_check",
    "kernel_dimension_profile",
    "transform_images",
    "uniqueness_transform_check",
]
