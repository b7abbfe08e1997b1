"""Characters of symmetric groups, A5, and the class-group representations."""

from .classfunction import (
    CharacterError,
    ClassFunction,
    decompose,
    format_decomposition,
    induce,
    invariant_rank,
    sym_power_character,
)
from .classgroup import VARIETIES, class_group_character, rank_table, summand_labels
from .partitions import label, mn_character, partitions, transpose
from .pic import induced_row, nonstandard_a5_restriction, pic_character, pic_decomposition
from .tables import (
    OUTER_SWAP,
    a5_irreducibles,
    a5_standard,
    outer_twist,
    outer_twist_by_cycle_type,
    s_n,
    sign_twist,
    sn_irreducibles,
)

__all__ = [
    "CharacterError",
    "ClassFunction",
    "OUTER_SWAP",
    "VARIETIES",
    "a5_irreducibles",
    "a5_standard",
    "class_group_character",
    "decompose",
    "format_decomposition",
    "induce",
    "induced_row",
    "invariant_rank",
    "label",
    "mn_character",
    "nonstandard_a5_restriction",
    "outer_twist",
    "outer_twist_by_cycle_type",
    "partitions",
    "pic_character",
    "pic_decomposition",
    "rank_table",
    "s_n",
    "sign_twist",
    "sn_irreducibles",
    "sym_power_character",
    "summand_labels",
    "transpose",
]
