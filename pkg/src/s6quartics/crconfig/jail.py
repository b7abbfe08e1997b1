"""Jail / bipartite decompositions of the configuration, one per splitting {1..6} = K0 | K1."""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, permutations

from ..algebra.matrix import rank_of_vectors
from ..groups.actions import normalize
from ..groups.outer import Duad, Syntheme, duads
from ..report import CheckReport, report
from .combinatorics import as_duad, as_syntheme
from .realization import intersection_point, realize


@dataclass(frozen=True)
class JailDecomposition:
    K0: tuple[int, ...]
    K1: tuple[int, ...]
    jail_lines: tuple[Syntheme, ...]  # the 6 lines Gamma(g), g a bijection K0 -> K1
    jail_points: tuple[Duad, ...]  # the 9 points P_{k0 k1}
    bipartite_lines: tuple[Syntheme, ...]  # the 9 lines L(k0 k1 | K0-k0 | K1-k1)
    bipartite_points: tuple[Duad, ...]  # the 6 points P_I with I inside K0 or inside K1

    @property
    def hyperplane(self) -> list[int]:
        """Coefficients of sum_{k in K0} x_k = 0."""
        return [1 if i in self.K0 else 0 for i in range(1, 7)]

    def to_json(self) -> dict:
        fmtd = lambda I: f"{I[0]}{I[1]}"  # noqa: E731
        fmts = lambda G: "|".join(fmtd(I) for I in G)  # noqa: E731
        return {
            "K0": list(self.K0),
            "K1": list(self.K1),
            "jail_lines": [fmts(G) for G in self.jail_lines],
            "jail_points": [fmtd(I) for I in self.jail_points],
            "bipartite_lines": [fmts(G) for G in self.bipartite_lines],
            "bipartite_points": [fmtd(I) for I in self.bipartite_points],
            "hyperplane": self.hyperplane,
        }


def decomposition(K0) -> JailDecomposition:
    K0 = tuple(sorted(K0))
    K1 = tuple(i for i in range(1, 7) if i not in K0)
    if len(K0) != 3:
        raise ValueError("K0 must have three elements")
    jail_lines = tuple(sorted(as_syntheme(zip(K0, img)) for img in permutations(K1)))
    jail_points = tuple(as_duad((a, b)) for a in K0 for b in K1)
    bip_lines = []
    for a in K0:
        for b in K1:
            ra = tuple(k for k in K0 if k != a)
            rb = tuple(k for k in K1 if k != b)
            bip_lines.append(as_syntheme([(a, b), ra, rb]))
    bip_points = tuple(I for I in duads() if set(I) <= set(K0) or set(I) <= set(K1))
    return JailDecomposition(K0, K1, jail_lines, jail_points, tuple(sorted(bip_lines)), bip_points)


def jail_decompositions() -> list[JailDecomposition]:
    """The 10 decompositions (K0 is taken to contain 1)."""
    return [decomposition((1,) + rest) for rest in combinations(range(2, 7), 2)]


def _grid_ok(D: JailDecomposition) -> tuple[bool, dict]:
    """The 6 jail lines split into two rulings of 3 skew lines; lines of opposite rulings meet
    in the 9 jail points."""
    R = realize()
    meets = {}
    for G1, G2 in combinations(D.jail_lines, 2):
        meets[(G1, G2)] = intersection_point(R.lines[G1], R.lines[G2])
    # build the "skew" graph and check it is two disjoint triangles
    skew = {G: {H for H in D.jail_lines if H != G and (meets.get((G, H)) or meets.get((H, G))) is None}
            for G in D.jail_lines}
    classes = {frozenset({G} | skew[G]) for G in D.jail_lines}
    pts = {p for p in meets.values() if p is not None}
    expected = {normalize(R.points[I]) for I in D.jail_points}
    ok = len(classes) == 2 and all(len(c) == 3 for c in classes) and pts == expected
    return ok, {"rulings": [len(c) for c in classes], "grid_points": len(pts)}


def jail_check() -> CheckReport:
    """Per decomposition: 6 + 9 + 9 + 6 elements; jail spans a hyperplane of P^4, bipartite spans P^4;
    each bipartite line meets the jail hyperplane only in its point P_{k0 k1}; jail lines form a 3x3 grid."""
    start = time.perf_counter()
    R = realize()
    failures = []
    for D in jail_decompositions():
        h = D.hyperplane
        jail_pts = [R.points[I] for I in D.jail_points]
        bip_pts = [R.points[I] for I in D.bipartite_points]
        counts_ok = (len(D.jail_lines), len(D.jail_points), len(D.bipartite_lines), len(D.bipartite_points)) == (6, 9, 9, 6)
        on_h = all(sum(a * x for a, x in zip(h, p)) == 0 for p in jail_pts)
        jail_lines_in_h = all(
            sum(a * x for a, x in zip(h, p)) == 0 for G in D.jail_lines for p in R.lines[G]
        )
        # rank 4 in the 6-dim ambient vector space = a P^3; bipartite points span the whole P^4 (rank 5)
        span_ok = rank_of_vectors(jail_pts) == 4 and rank_of_vectors(bip_pts) == 5
        meet_ok = True
        for G in D.bipartite_lines:
            a, b = R.lines[G]
            ha, hb = sum(x * y for x, y in zip(h, a)), sum(x * y for x, y in zip(h, b))
            if ha == 0 and hb == 0:
                meet_ok = False
                continue
            p = normalize(tuple(hb * a[i] - ha * b[i] for i in range(6)))
            (d,) = [I for I in G if I in D.jail_points]
            if p != normalize(R.points[d]):
                meet_ok = False
        grid_ok, grid = _grid_ok(D)
        if not (counts_ok and on_h and jail_lines_in_h and span_ok and meet_ok and grid_ok):
            failures.append({"K0": D.K0, "counts": counts_ok, "on_hyperplane": on_h, "span": span_ok,
                             "bipartite_meet": meet_ok, "grid": grid})
    return report("cr_jail_decompositions", not failures and len(jail_decompositions()) == 10,
                  witness=failures, details={"decompositions": 10}, started=start)


def jail_hyperplanes_stable_check() -> CheckReport:
    """S6 permutes the 10 jail hyperplanes (as a set of hyperplanes)."""
    from ..groups.subgroup import symmetric_group

    start = time.perf_counter()

    def canon(h):
        # hyperplanes sum_{K0} x = 0 and sum_{K1} x = 0 agree on {sum x = 0}
        K0 = frozenset(i + 1 for i, a in enumerate(h) if a)
        return min(K0, frozenset(range(1, 7)) - K0, key=sorted)

    hs = {canon(D.hyperplane) for D in jail_decompositions()}
    bad = []
    for g in symmetric_group(6):
        for K in hs:
            img = frozenset(g(i) for i in K)
            if min(img, frozenset(range(1, 7)) - img, key=sorted) not in hs:
                bad.append((str(g), sorted(K)))
    return report("cr_jail_hyperplanes_s6_stable", len(hs) == 10 and not bad,
                  witness=bad[:5], details={"hyperplanes": len(hs)}, started=start)
