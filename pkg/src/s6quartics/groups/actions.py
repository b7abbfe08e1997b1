"""Actions of S6 (and S6 x mu2) on projective points.

Points are sequences of exact scalars.  Six-coordinate points are acted on by
permuting coordinates, ``(g.x)_i = x_{g(i)}``.  Seven-coordinate points carry an
extra leading coordinate ``x0`` (the Coble ambient) which is left alone by the
natural action and multiplied by ``sign(g)`` in the twisted action.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from ..algebra.scalars import divide
from .perm import Perm
from .subgroup import Subgroup

MODES = ("natural", "twisted", "product")

Point = tuple


class DimensionError(ValueError):
    pass


def normalize(p: Sequence) -> Point:
    """Scale so that the first nonzero coordinate equals 1."""
    for c in p:
        if c != 0:
            return tuple(divide(x, c) for x in p)
    raise ValueError("the zero vector is not a projective point")


def act_on_point(g, p: Sequence, mode: str = "natural", normalized: bool = True) -> Point:
    """Image of ``p`` under ``g``.

    ``g`` is a :class:`Perm` (modes ``natural``/``twisted``) or, in ``product``
    mode, a pair ``(perm, e)`` in S6 x mu2 where ``e`` in {0, 1} flips the sign
    of ``x0`` (the Galois involution is ``(identity, 1)``).
    """
    if mode not in MODES:
        raise ValueError(f"unknown action mode {mode!r}")
    if mode == "product":
        perm, e = g
        x0_sign = -1 if e % 2 else 1
    else:
        perm = g
        x0_sign = perm.sign if mode == "twisted" else 1
    n = perm.n
    if len(p) == n:
        if mode != "natural":
            raise DimensionError(f"{mode} action needs a leading x0 coordinate")
        out = tuple(p[perm(i) - 1] for i in range(1, n + 1))
    elif len(p) == n + 1:
        out = (x0_sign * p[0],) + tuple(p[perm(i)] for i in range(1, n + 1))
    else:
        raise DimensionError(f"point has {len(p)} coordinates, expected {n} or {n + 1}")
    return normalize(out) if normalized else out


def galois_involution(p: Sequence) -> Point:
    """``x0 -> -x0``, other coordinates fixed."""
    if len(p) != 7:
        raise DimensionError("the involution acts on the Coble ambient (7 coordinates)")
    return normalize((-p[0],) + tuple(p[1:]))


def orbit(H: Subgroup | Iterable, p: Sequence, mode: str = "natural") -> set[Point]:
    """The orbit of the normalized point ``p`` under all elements of ``H``."""
    return {act_on_point(g, p, mode) for g in H}


def stabilizer(H: Subgroup, p: Sequence, mode: str = "natural") -> list[Perm]:
    q = normalize(p)
    return [g for g in H if act_on_point(g, q, mode) == q]


def orbit_stabilizer_holds(H: Subgroup, p: Sequence, mode: str = "natural") -> bool:
    return len(orbit(H, p, mode)) * len(stabilizer(H, p, mode)) == H.order


def orbit_decomposition(H: Subgroup, points: Iterable[Sequence], mode: str = "natural") -> list[set[Point]]:
    """Split a (stable) point set into H-orbits, in order of first appearance."""
    remaining = [normalize(p) for p in points]
    seen: set[Point] = set()
    out = []
    for p in remaining:
        if p in seen:
            continue
        orb = orbit(H, p, mode)
        seen |= orb
        out.append(orb)
    return out


def s6_times_mu2(H: Subgroup) -> list[tuple[Perm, int]]:
    """Elements of ``H x mu2`` as pairs."""
    return [(g, e) for e in (0, 1) for g in H]
