"""Coordinates for the configuration: points of duads and lines of synthemes in P^4 = {sum x = 0}."""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from ..algebra.matrix import ScalarMatrix, rank_of_vectors
from ..groups.actions import normalize
from ..groups.outer import Duad, Syntheme, duads, synthemes
from ..report import CheckReport, report
from .combinatorics import incidence

Point = tuple


def duad_point(I: Duad) -> Point:
    """(2 on I, -1 elsewhere), e.g. the duad {1,2} gives (2:2:-1:-1:-1:-1)."""
    return tuple(2 if i in I else -1 for i in range(1, 7))


def line_equations(G: Syntheme) -> list[list[int]]:
    """Linear forms x_i - x_j for each duad {i, j} of the syntheme, plus the hyperplane."""
    rows = []
    for i, j in G:
        row = [0] * 6
        row[i - 1], row[j - 1] = 1, -1
        rows.append(row)
    rows.append([1] * 6)
    return rows


def on_line_equations(p: Point, G: Syntheme) -> bool:
    return all(sum(a * x for a, x in zip(row, p)) == 0 for row in line_equations(G))


def on_span(p: Point, spanning: tuple[Point, Point]) -> bool:
    return rank_of_vectors([spanning[0], spanning[1], p]) == 2


@dataclass(frozen=True)
class CRRealization:
    points: dict  # duad -> coordinates
    lines: dict  # syntheme -> (point, point) spanning the line

    def geometric_incidence(self, I: Duad, G: Syntheme) -> bool:
        return on_span(self.points[I], self.lines[G])

    def geometric_incidence_matrix(self) -> list[list[int]]:
        return [[int(self.geometric_incidence(I, G)) for G in synthemes()] for I in duads()]

    def line_points(self, G: Syntheme) -> tuple[Point, Point]:
        return self.lines[G]

    def to_json(self) -> dict:
        return {
            "points": {f"{I[0]}{I[1]}": list(p) for I, p in self.points.items()},
            "lines": {"|".join(f"{a}{b}" for a, b in G): [list(p) for p in span] for G, span in self.lines.items()},
        }


@lru_cache(maxsize=1)
def realize() -> CRRealization:
    """Points from the duad formula; each line spanned by its two lexicographically smallest duad points."""
    points = {I: duad_point(I) for I in duads()}
    lines = {}
    for G in synthemes():
        d1, d2 = sorted(G)[:2]
        lines[G] = (points[d1], points[d2])
    return CRRealization(points, lines)


def intersection_point(l1: tuple[Point, Point], l2: tuple[Point, Point]) -> Point | None:
    """The common point of two distinct lines, or None when they are skew."""
    a, b = l1
    c, d = l2
    # solve x a + y b = z c + w d
    M = ScalarMatrix([[a[i], b[i], -c[i], -d[i]] for i in range(6)])
    ker = M.kernel()
    if len(ker) != 1:
        return None
    x, y, _, _ = ker[0]
    return normalize(tuple(x * a[i] + y * b[i] for i in range(6)))


def line_intersections() -> dict[tuple[Syntheme, Syntheme], Point]:
    R = realize()
    out = {}
    for G1, G2 in combinations(synthemes(), 2):
        p = intersection_point(R.lines[G1], R.lines[G2])
        if p is not None:
            out[(G1, G2)] = p
    return out


def realization_check() -> CheckReport:
    """Geometric incidence equals combinatorial incidence; points on the hyperplane; line equations agree."""
    start = time.perf_counter()
    R = realize()
    geo = R.geometric_incidence_matrix()
    comb = [[int(incidence(I, G)) for G in synthemes()] for I in duads()]
    eq_based = [[int(on_line_equations(R.points[I], G)) for G in synthemes()] for I in duads()]
    on_hyperplane = all(sum(p) == 0 for p in R.points.values())
    ok = geo == comb and eq_based == comb and on_hyperplane
    mism = [(I, G) for i, I in enumerate(duads()) for j, G in enumerate(synthemes()) if geo[i][j] != comb[i][j]]
    return report("cr_realization", ok, witness={"mismatches": mism, "on_hyperplane": on_hyperplane},
                  details={"incident_pairs": sum(map(sum, geo))}, started=start)


def intersections_check() -> CheckReport:
    """The 15 lines meet in exactly 15 distinct points, which form the orbit of (2:2:-1:-1:-1:-1)."""
    from ..varieties.orbits import orbit_catalog

    start = time.perf_counter()
    inter = line_intersections()
    pts = set(inter.values())
    upsilon = set(orbit_catalog().orbits["Upsilon15"])
    ok = len(pts) == 15 and pts == upsilon and len(inter) == 45
    return report("cr_line_intersections", ok,
                  witness={"distinct_points": len(pts), "meeting_pairs": len(inter)},
                  details={"meeting_pairs": len(inter), "distinct_points": len(pts)}, started=start)
