"""Special S6-orbits of points in the hyperplane sum x = 0."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..algebra.scalars import format_scalar, primitive_cube_root_of_unity
from ..groups.actions import normalize, orbit
from ..groups.subgroup import symmetric_group


def _representatives() -> dict[str, tuple]:
    w = primitive_cube_root_of_unity()
    w2 = w * w
    return {
        "Sigma6": (5, -1, -1, -1, -1, -1),
        "Sigma10": (1, 1, 1, -1, -1, -1),
        "Sigma15": (1, -1, 0, 0, 0, 0),
        "Sigma30": (1, 1, w, w, w2, w2),
        "Upsilon15": (2, 2, -1, -1, -1, -1),
    }


ORBIT_NAMES = ("Sigma6", "Sigma10", "Sigma15", "Sigma30", "Upsilon15")
EXPECTED_SIZES = {"Sigma6": 6, "Sigma10": 10, "Sigma15": 15, "Sigma30": 30, "Upsilon15": 15}


def point_key(p) -> tuple[str, ...]:
    """Deterministic sort key for exact points."""
    return tuple(format_scalar(c) for c in p)


@dataclass(frozen=True)
class OrbitCatalog:
    representatives: dict
    orbits: dict

    def all_points(self) -> list[tuple[str, tuple]]:
        """(orbit name, normalized point) for all 76 catalog points."""
        return [(name, p) for name in ORBIT_NAMES for p in self.orbits[name]]

    def orbit_of(self, point) -> str | None:
        q = normalize(point)
        for name in ORBIT_NAMES:
            if q in self.orbits[name]:
                return name
        return None

    def sizes(self) -> dict[str, int]:
        return {n: len(self.orbits[n]) for n in ORBIT_NAMES}

    def to_json(self) -> dict:
        return {
            n: {"representative": [format_scalar(c) for c in self.representatives[n]],
                "size": len(self.orbits[n])}
            for n in ORBIT_NAMES
        }


@lru_cache(maxsize=1)
def orbit_catalog() -> OrbitCatalog:
    s6 = symmetric_group(6)
    reps = _representatives()
    orbits = {}
    for name in ORBIT_NAMES:
        pts = orbit(s6, reps[name])
        orbits[name] = tuple(sorted(pts, key=point_key))
    return OrbitCatalog(representatives=reps, orbits=orbits)
