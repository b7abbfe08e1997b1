"""Duads, synthemes and their incidence; self-duality via the outer automorphism."""

from __future__ import annotations

import time

from ..groups.outer import (
    Duad,
    Syntheme,
    act_on_duad,
    act_on_syntheme,
    duad_perm,
    duad_to_syntheme,
    duads,
    syntheme_perm,
    syntheme_to_duad,
    synthemes,
)
from ..groups.perm import Perm
from ..report import CheckReport, report


def as_duad(I) -> Duad:
    d = tuple(sorted(I))
    if len(d) != 2 or len(set(d)) != 2 or not all(1 <= i <= 6 for i in d):
        raise ValueError(f"{I!r} is not a duad of {{1..6}}")
    return d  # type: ignore[return-value]


def as_syntheme(G) -> Syntheme:
    s = tuple(sorted(as_duad(I) for I in G))
    if len(s) != 3 or sorted(i for I in s for i in I) != [1, 2, 3, 4, 5, 6]:
        raise ValueError(f"{G!r} is not a syntheme")
    return s  # type: ignore[return-value]


def incidence(I, G) -> bool:
    """The point of duad I lies on the line of syntheme G iff I is one of its duads."""
    return as_duad(I) in as_syntheme(G)


def commuting_incidence(I, G) -> bool:
    """Group-theoretic form: the transposition w(I) commutes with the triple transposition w(G)."""
    a, b = duad_perm(as_duad(I)), syntheme_perm(as_syntheme(G))
    return a * b == b * a


def incidence_matrix() -> list[list[int]]:
    """15 x 15 0/1 matrix, rows = duads, columns = synthemes (both lexicographic)."""
    return [[int(incidence(I, G)) for G in synthemes()] for I in duads()]


def commuting_agreement() -> tuple[int, list]:
    """Number of (duad, syntheme) pairs checked and the list of disagreements."""
    bad = [(I, G) for I in duads() for G in synthemes() if incidence(I, G) != commuting_incidence(I, G)]
    return len(duads()) * len(synthemes()), bad


def configuration_check() -> CheckReport:
    """(15_3): every point on 3 lines, every line through 3 points; commuting criterion agrees."""
    start = time.perf_counter()
    M = incidence_matrix()
    rows = [sum(r) for r in M]
    cols = [sum(c) for c in zip(*M)]
    pairs, bad = commuting_agreement()
    ok = len(M) == 15 and len(M[0]) == 15 and set(rows) == {3} and set(cols) == {3} and not bad
    return report(
        "cr_incidence_15_3",
        ok,
        witness={"row_sums": rows, "col_sums": cols, "disagreements": bad},
        details={"pairs_checked": pairs, "points": 15, "lines": 15},
        started=start,
    )


def self_duality_check() -> CheckReport:
    """The outer automorphism's duad <-> syntheme bijections preserve incidence both ways."""
    start = time.perf_counter()
    d2s = duad_to_syntheme()
    s2d = syntheme_to_duad()
    bad = []
    for I in duads():
        for G in synthemes():
            if incidence(I, G) != incidence(s2d[G], d2s[I]):
                bad.append((I, G))
    bijective = len(set(d2s.values())) == 15 and len(set(s2d.values())) == 15
    # negative control: the bijection that matches lexicographic positions
    naive = dict(zip(duads(), synthemes()))
    naive_inv = dict(zip(synthemes(), duads()))
    naive_bad = sum(
        incidence(I, G) != incidence(naive_inv[G], naive[I]) for I in duads() for G in synthemes()
    )
    return report(
        "cr_self_duality",
        bijective and not bad and naive_bad > 0,
        witness={"violations": bad, "bijective": bijective, "naive_violations": naive_bad},
        details={"pairs_checked": 225, "naive_bijection_violations": naive_bad},
        started=start,
    )


def orbit_counts(H, on: str) -> list[int]:
    """Orbit sizes of a permutation group on duads or synthemes."""
    items = duads() if on == "duads" else synthemes()
    act = act_on_duad if on == "duads" else act_on_syntheme
    seen, sizes = set(), []
    for x in items:
        if x in seen:
            continue
        orb = {act(g, x) for g in H}
        seen |= orb
        sizes.append(len(orb))
    return sorted(sizes, reverse=True)


def a5_transitivity_check() -> CheckReport:
    """A standard A5 is transitive on the lines, a non-standard one on the points."""
    from ..groups.outer import outer_automorphism
    from ..groups.subgroup import Subgroup, alternating_group

    start = time.perf_counter()
    std = alternating_group(6, [1, 2, 3, 4, 5])
    alpha = outer_automorphism()
    nonstd = Subgroup(alpha(g) for g in std)
    res = {
        "standard_on_lines": orbit_counts(std, "synthemes"),
        "standard_on_points": orbit_counts(std, "duads"),
        "nonstandard_on_points": orbit_counts(nonstd, "duads"),
        "nonstandard_on_lines": orbit_counts(nonstd, "synthemes"),
    }
    ok = res["standard_on_lines"] == [15] and res["nonstandard_on_points"] == [15]
    return report("cr_a5_transitivity", ok, witness=res, details=res, started=start)


__all__ = [
    "Perm",
    "a5_transitivity_check",
    "as_duad",
    "as_syntheme",
    "commuting_agreement",
    "commuting_incidence",
    "configuration_check",
    "incidence",
    "incidence_matrix",
    "orbit_counts",
    "self_duality_check",
]
