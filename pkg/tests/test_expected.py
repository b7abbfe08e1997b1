from __future__ import annotations

from fractions import Fraction

import pytest

from s6quartics.algebra import QuadraticNumber
from s6quartics.expected import TABLE_IDS, expected, expected_tables, parse_value


def test_all_tables_present():
    assert set(TABLE_IDS) <= set(expected_tables())


@pytest.mark.parametrize("table_id", TABLE_IDS)
def test_every_row_carries_provenance(table_id):
    data = expected(table_id)
    rows = data.get("rows") or data.get("columns")
    assert rows
    for row in rows:
        assert row.get("source") in {"PAPER", "DERIVED"}, row


def test_unknown_table_id():
    with pytest.raises(KeyError):
        expected("no_such_table")


@pytest.mark.parametrize("text, value", [
    ("7/10", Fraction(7, 10)),
    ("-1/(5*sqrt(5))", -1 / (5 * QuadraticNumber.sqrt(5))),
    ("1/sqrt(-3)", 1 / QuadraticNumber.sqrt(-3)),
    ("inf", "inf"),
])
def test_parse_value(text, value):
    assert parse_value(text) == value


def test_parse_value_rejects_code():
    with pytest.raises(ValueError):
        parse_value("__import__('os')")
