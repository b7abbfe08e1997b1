"""The nine acceptance criteria, each run against its time limit.

Every test prints a single ``ACCEPTANCE <n> PASS|FAIL`` line (also repeated in the
terminal summary).
"""

from __future__ import annotations

import json
import subprocess
import sys
import time

import pytest

from conftest import ACCEPTANCE_LINES
from s6quartics.cli.registry import BY_NAME
from s6quartics.cli.tables import table

IDENTITY_CHECKS = (
    "rho42_lands_in_coble",
    "rho42_flipped_lands_in_coble",
    "toric_projection_lands_in_cubic",
    "igusa_substitution",
    "ramification_determinant_form",
    "cubic_involution_is_involution",
    "plane_pair_involution_is_involution",
    "involution_compatibility",
    "verra_pullback_equalities",
    "verra_discriminant_identity",
    "x_tau_splitting",
    "burkhardt_factorization",
    "hyperplane_pullbacks",
)
CR_CHECKS = tuple(n for n in BY_NAME if n.startswith("cr_"))
REPRESENTATION_CHECKS = (
    "sn_character_orthogonality",
    "a5_character_table",
    "cubic_invariant_unique",
    "class_group_dimensions",
)


def _record(capsys, number: int, title: str, ok: bool, elapsed: float, limit: float | None, note: str = ""):
    within = limit is None or elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    bound = f"limit {limit:.0f}s" if limit is not None else "no limit"
    line = f"ACCEPTANCE {number} {status}: {title} ({elapsed:.2f}s, {bound}){' - ' + note if note else ''}"
    ACCEPTANCE_LINES.append(line)
    with capsys.disabled():
        print("\n" + line)
    return ok and within


def _run(names):
    reports = [BY_NAME[n].run() for n in names]
    return [r.name for r in reports if not r.passed]


def test_1_identity_suite(capsys):
    start = time.perf_counter()
    failed = _run(IDENTITY_CHECKS)
    elapsed = time.perf_counter() - start
    assert _record(capsys, 1, "exact identity suite", not failed, elapsed, 10, ", ".join(failed)), failed


def test_2_singular_orbit_table(capsys):
    start = time.perf_counter()
    failed = _run(["singular_orbit_table"])
    elapsed = time.perf_counter() - start
    assert _record(capsys, 2, "singular orbits on 76 catalog points, nodes certified", not failed, elapsed, 10)


def test_3_cremona_richmond_suite(capsys):
    start = time.perf_counter()
    failed = _run(CR_CHECKS)
    elapsed = time.perf_counter() - start
    assert len(CR_CHECKS) == 9
    assert _record(capsys, 3, "Cremona-Richmond suite", not failed, elapsed, 60, ", ".join(failed)), failed


def test_4_wiman_edge_singular_members(capsys):
    from s6quartics.varieties import wiman_edge_singular_params

    start = time.perf_counter()
    failed = _run(["wiman_edge_singular_members", "wiman_edge_base_points"])
    factors = sorted(str(f) for f in wiman_edge_singular_params())
    ok = not failed and factors == sorted(["s", "125*s^2 - 1", "3*s^2 + 1"])
    elapsed = time.perf_counter() - start
    assert _record(capsys, 4, "Wiman-Edge singular members {0, +-1/sqrt 125, +-1/sqrt -3}", ok, elapsed, 600,
                   f"factors {factors}")


def test_5_parameter_value_table(capsys):
    start = time.perf_counter()
    failed = _run(["tau_parameter_table"])
    rep = table("tau_values")
    ok = not failed and rep.match and len(rep.rows) == 8
    elapsed = time.perf_counter() - start
    assert _record(capsys, 5, "tau / s / t value table, ramification, multiplicities", ok, elapsed, None)


def test_6_representation_suite(capsys):
    start = time.perf_counter()
    failed = _run(REPRESENTATION_CHECKS)
    tables = {tid: table(tid) for tid in ("lemma5.8", "lemma5.10", "cor4.4", "thm5.7", "lemma3.5")}
    mismatched = [tid for tid, rep in tables.items() if not rep.match]
    dims = {r["t"]: r["rank"] for r in tables["lemma3.5"].rows if r["rank"] is not None}
    y_dims = {r["dim"] for r in tables["thm5.7"].rows if r["variety"] in ("Y", "X_inf")}
    ok = (not failed and not mismatched and dims == {"generic": 6, "1/2": 16, "1/6": 11, "7/10": 7}
          and y_dims == {6})
    elapsed = time.perf_counter() - start
    assert _record(capsys, 6, "representation suite", ok, elapsed, 30, ", ".join(failed + mismatched))


@pytest.mark.slow
def test_7_subgroup_suite(capsys):
    start = time.perf_counter()
    failed = _run(["subgroup_classes"])
    rank1, rank2 = table("cor5.3"), table("cor5.6")
    counts1 = [r["count"] for r in rank1.rows]
    counts2 = [r["count"] for r in rank2.rows]
    census_logged = all(c["census"] for rep in (rank1, rank2) for r in rep.rows for c in r["classes"])
    ok = (not failed and rank1.match and rank2.match and census_logged
          and counts1 == [25, 16, 14, 11, 20] and counts2 == [22, 22, 19, 13, 17])
    elapsed = time.perf_counter() - start
    assert _record(capsys, 7, "56 subgroup classes and invariant-rank sweeps", ok, elapsed, 300,
                   f"rank 1 {counts1}, rank 2 {counts2}")


def test_8_conic_fibre_suite(capsys):
    start = time.perf_counter()
    failed = _run(["conic_fibre_corank", "q_inf_cremona_richmond"])
    elapsed = time.perf_counter() - start
    assert _record(capsys, 8, "conic fibres at (0:1:1) and Q_inf against the configuration", not failed,
                   elapsed, 10, ", ".join(failed))


def _verify_all():
    proc = subprocess.run([sys.executable, "-m", "s6quartics", "verify", "all", "--seed", "0"],
                          capture_output=True, text=True)
    records = [json.loads(line) for line in proc.stdout.splitlines()]
    for r in records:
        r.pop("elapsed", None)
    return proc.returncode, records


@pytest.mark.slow
def test_9_cli_contract(capsys):
    start = time.perf_counter()
    code1, first = _verify_all()
    code2, second = _verify_all()
    names = {r["name"] for r in first}
    ok = code1 == 0 and code2 == 0 and len(names) == len(first) >= 40 and first == second
    elapsed = time.perf_counter() - start
    assert _record(capsys, 9, "verify all: exit 0, >= 40 distinct records, deterministic", ok, elapsed, None,
                   f"{len(first)} records")
