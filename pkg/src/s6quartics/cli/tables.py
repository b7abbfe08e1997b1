"""Table id -> recomputation, each returning a TableReport diffed against the embedded rows."""

from __future__ import annotations

from typing import Callable

from ..expected import TABLE_IDS
from ..report import TableReport
from ..reps.checks import (
    a5_restriction_table,
    class_group_table,
    induced_a5_table,
    pencil_rank_table,
    rank_table_report,
    s6_irreducible_table,
)
from ..varieties.tables import parameter_value_table_report, singular_orbit_table_report


def singular_orbits_table() -> TableReport:
    return singular_orbit_table_report()


def tau_values_table() -> TableReport:
    return parameter_value_table_report()


def rank_one_table(variety: str | None = None, action: str | None = None) -> TableReport:
    return rank_table_report(1, variety, action)


def rank_two_table(variety: str | None = None, action: str | None = None) -> TableReport:
    return rank_table_report(2, variety, action)


TABLES: dict[str, Callable[..., TableReport]] = {
    "thm3.1": singular_orbits_table,
    "lemma3.5": pencil_rank_table,
    "tau_values": tau_values_table,
    "thm5.7": class_group_table,
    "cor5.3": rank_one_table,
    "cor5.6": rank_two_table,
    "lemma5.8": s6_irreducible_table,
    "lemma5.10": a5_restriction_table,
    "cor4.4": induced_a5_table,
}
FILTERABLE = ("cor5.3", "cor5.6")

assert tuple(TABLES) == TABLE_IDS


def table(table_id: str, variety: str | None = None, action: str | None = None) -> TableReport:
    if table_id not in TABLES:
        raise KeyError(table_id)
    if table_id in FILTERABLE:
        return TABLES[table_id](variety, action)
    return TABLES[table_id]()

