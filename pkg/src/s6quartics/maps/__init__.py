"""Explicit rational maps and the verification of their polynomial identities."""

from __future__ import annotations

from .catalog import (
    MAPS,
    RationalMap,
    coble_resolution,
    cubic_involution,
    get_map,
    has_common_factor,
    plane_pair_involution,
    ramification_determinant,
    swap_map,
    toric_projection,
    x0_formula,
    yz_swap,
    yz_to_x,
)
from .embedding import EmbeddingRecord, Intertwiner, S42Element, embedding_check, induced_embedding_s42, intertwiner
from .verify import (
    catalog_content_check,
    discriminant_form,
    proportional_components,
    verify_burkhardt_factorization,
    verify_determinant_form,
    verify_hyperplane_pullbacks,
    verify_igusa_substitution,
    verify_involution,
    verify_lands_in,
    verify_involution_compatibility,
)

__all__ = [
    "EmbeddingRecord",
    "Intertwiner",
    "MAPS",
    "RationalMap",
    "S42Element",
    "catalog_content_check",
    "coble_resolution",
    "cubic_involution",
    "discriminant_form",
    "embedding_check",
    "get_map",
    "has_common_factor",
    "induced_embedding_s42",
    "intertwiner",
    "plane_pair_involution",
    "proportional_components",
    "ramification_determinant",
    "swap_map",
    "toric_projection",
    "verify_burkhardt_factorization",
    "verify_determinant_form",
    "verify_hyperplane_pullbacks",
    "verify_igusa_substitution",
    "verify_involution",
    "verify_lands_in",
    "verify_involution_compatibility",
    "x0_formula",
    "yz_swap",
    "yz_to_x",
]
