from __future__ import annotations

import json
import re
from pathlib import Path

import pytest

from s6quartics.cli import REGISTRY, TABLES, main
from s6quartics.cli.registry import check_names, select
from s6quartics.expected import TABLE_IDS

README = Path(__file__).resolve().parents[1] / "README.md"
QUICK = ["generate_examples", "x_tau_splitting", "cr_incidence_15_3", "frobenius_reciprocity",
         "random_subgroups_classified", "map_catalog_content"]


def _lines(capsys):
    return [json.loads(line) for line in capsys.readouterr().out.splitlines() if line.strip()]


def test_registry_is_large_and_unique():
    names = check_names()
    assert len(names) >= 40
    assert len(set(names)) == len(names)
    assert all(re.fullmatch(r"[a-z0-9_]+", n) for n in names)


def test_registry_functions_resolve():
    for c in REGISTRY:
        assert callable(c.resolve()), c.name


def test_readme_lists_exactly_the_registry():
    text = README.read_text(encoding="utf-8")
    block = text.split("<!-- checks:start -->")[1].split("<!-- checks:end -->")[0]
    documented = re.findall(r"^- `([a-z0-9_]+)`", block, flags=re.M)
    assert documented == check_names()


def test_table_ids_cover_all_tables():
    assert tuple(TABLES) == TABLE_IDS


def test_unknown_check_rejected_before_work(capsys):
    assert main(["verify", "generate_examples", "no_such_check"]) == 2
    assert capsys.readouterr().out == ""  # nothing ran


def test_select_keeps_registry_order():
    picked = select(["cr_self_duality", "generate_examples", "cr_incidence_15_3"])
    order = check_names()
    assert [c.name for c in picked] == sorted((c.name for c in picked), key=order.index)


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["bogus-command"])
    assert exc.value.code == 2
    assert main(["table", "no_such_table"]) == 2


def test_report_names_match_registry(capsys):
    assert main(["verify", *QUICK]) == 0
    assert [r["name"] for r in _lines(capsys)] == [n for n in check_names() if n in QUICK]


def test_deterministic_modulo_timing_and_jobs(capsys, tmp_path):
    out = tmp_path / "run.jsonl"
    assert main(["verify", *QUICK, "--seed", "3", "--json", str(out)]) == 0
    first = _lines(capsys)
    assert main(["verify", *QUICK, "--seed", "3", "--jobs", "2"]) == 0
    second = _lines(capsys)
    for r in first + second:
        r.pop("elapsed")
    assert first == second
    assert len(out.read_text().splitlines()) == len(QUICK)


def test_table_cor53_twisted_row(capsys):
    assert main(["table", "cor5.3", "--action", "twisted"]) == 0
    (rec,) = _lines(capsys)
    assert rec["match"] and [r["count"] for r in rec["rows"]] == [16]
    assert len(rec["rows"][0]["classes"]) == 16


def test_table_cor56_one_sixth_row(capsys):
    assert main(["table", "cor5.6", "--variety", "X_1/6"]) == 0
    (rec,) = _lines(capsys)
    assert rec["rows"][0]["count"] == 13


def test_table_provenance_markers(capsys):
    assert main(["table", "lemma3.5"]) == 0
    (rec,) = _lines(capsys)
    assert {row["source"] for row in rec["expected"]} <= {"PAPER", "DERIVED"}
    assert rec["notes"]["data_only_rows"] == ["1/4"]


def test_singular_locus_command(capsys):
    assert main(["singular-locus", "--t", "7/10"]) == 0
    (rec,) = _lines(capsys)
    assert sorted(rec["singular_orbits"]) == ["Sigma30", "Sigma6"]
    assert rec["all_singular_points_nodes"]


@pytest.mark.parametrize("point", ["0:1:1", "0,1,1"])
def test_conic_command(capsys, point):
    assert main(["conic", "--tau", "1", "--u", point]) == 0
    (rec,) = _lines(capsys)
    assert rec["rank"] == 2 and rec["vertex"] == ["1", "0", "1"]


def test_subgroups_command(capsys):
    assert main(["subgroups", "--rank", "1", "--variety", "X_generic"]) == 0
    (rec,) = _lines(capsys)
    assert rec["count"] == 25


def test_characters_command(capsys):
    assert main(["characters", "--group", "S6"]) == 0
    (rec,) = _lines(capsys)
    assert len(rec["characters"]) == 11
    assert main(["characters", "--group", "A5"]) == 0
    (rec,) = _lines(capsys)
    assert set(rec["characters"]) == {"R1", "R3'", "R3''", "R4", "R5"}


def test_cr_commands(capsys):
    assert main(["cr", "--kernel"]) == 0
    (rec,) = _lines(capsys)
    assert rec["kernel_dimension"] == 1
    assert main(["cr", "--decompositions"]) == 0
    (rec,) = _lines(capsys)
    assert len(rec["decompositions"]) == 10
    assert main(["cr", "--incidence"]) == 0
    (rec,) = _lines(capsys)
    assert len(rec["incidence"]) == 15
    assert main(["cr", "--check", "cr_incidence_15_3"]) == 0
    assert _lines(capsys)[0]["status"] == "pass"


def test_orbits_and_wiman_edge_commands(capsys):
    assert main(["orbits"]) == 0
    (rec,) = _lines(capsys)
    assert sum(o["size"] for o in rec.values()) == 76
    assert main(["wiman-edge", "--singular-members"]) == 0
    (rec,) = _lines(capsys)
    assert sorted(rec["factors"]) == sorted(["s", "125*s^2 - 1", "3*s^2 + 1"])
