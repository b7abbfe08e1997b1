"""The embedding S4 x S2 -> S6 induced by the Coble resolution map.

An element h of S4 x S2 acts on P^2 x P^2 (S4 diagonally through the plane
automorphisms permuting (1:1:1), (1:0:0), (0:1:0), (0:0:1); S2 by swapping the
factors).  Composing the map with h permutes x1..x6 up to one common scalar c
and multiplies x0 by +-c^2; the permutation is the image of h in S6.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import permutations

from ..algebra.poly import Poly, proportionality_factor
from ..algebra.scalars import format_scalar
from ..groups.perm import Perm
from ..report import CheckReport, report
from ..varieties.catalog import UV_RING
from ..varieties.verra import perm_sign, plane_automorphism
from .catalog import RationalMap, coble_resolution

U_NAMES = ("u1", "u2", "u3")
V_NAMES = ("v1", "v2", "v3")


class NoIntertwinerError(ArithmeticError):
    pass


@dataclass(frozen=True)
class S42Element:
    sigma: tuple[int, ...]  # permutation of the four points 0..3
    swap: bool

    def __mul__(self, other: "S42Element") -> "S42Element":
        return S42Element(tuple(self.sigma[i] for i in other.sigma), self.swap != other.swap)

    @property
    def sign(self) -> int:
        return perm_sign(self.sigma) * (-1 if self.swap else 1)

    def substitution(self) -> list[Poly]:
        """Images of u1..u3, v1..v3 under (u, v) -> g(u, v)."""
        g = plane_automorphism(self.sigma)
        u = [UV_RING.gen(n) for n in U_NAMES]
        v = [UV_RING.gen(n) for n in V_NAMES]
        if self.swap:
            u, v = v, u
        gu = [sum((u[k] * g[i, k] for k in range(3)), UV_RING.zero()) for i in range(3)]
        gv = [sum((v[k] * g[i, k] for k in range(3)), UV_RING.zero()) for i in range(3)]
        return gu + gv

    def label(self) -> str:
        return f"{''.join(map(str, self.sigma))}{'/swap' if self.swap else ''}"


@dataclass(frozen=True)
class Intertwiner:
    element: S42Element
    perm: Perm  # image in S6
    x0_sign: int
    scalar: object  # common factor c on x1..x6

    def to_json(self) -> dict:
        return {
            "element": self.element.label(),
            "image": self.perm.cycle_notation(),
            "cycle_type": list(self.perm.cycle_type),
            "x0_sign": self.x0_sign,
            "scalar": format_scalar(self.scalar),
        }


def intertwiner(h: S42Element, m: RationalMap | None = None) -> Intertwiner:
    """Solve x_i o h = c x_{p^-1(i)} (i = 1..6), x0 o h = e c^2 x0 for the permutation p and the sign e."""
    m = m or coble_resolution()
    sub = h.substitution()
    moved = [c.substitute(sub, UV_RING) for c in m.components]
    xs = m.components[1:]
    images = {}
    c = None
    for i, f in enumerate(moved[1:], start=1):
        hits = [(j, proportionality_factor(f, xj)) for j, xj in enumerate(xs, start=1)]
        hits = [(j, k) for j, k in hits if k is not None and k != 0]
        if len(hits) != 1:
            raise NoIntertwinerError(f"x{i} o {h.label()} is not a multiple of a single coordinate")
        j, k = hits[0]
        if c is None:
            c = k
        elif k != c:
            raise NoIntertwinerError(f"{h.label()}: coordinates rescaled by different factors")
        images[j] = i
    e = proportionality_factor(moved[0], m.components[0])
    if e is None or e not in (c * c, -c * c):
        raise NoIntertwinerError(f"{h.label()}: x0 is not mapped to +-c^2 x0")
    # x_i o h = c x_j  <=>  h sends coordinate j to slot i; p(j) = i is then multiplicative
    p = Perm([images[j] for j in range(1, 7)])
    return Intertwiner(h, p, 1 if e == c * c else -1, c)


def s42_elements() -> list[S42Element]:
    return [S42Element(s, w) for w in (False, True) for s in permutations(range(4))]


def generators() -> list[S42Element]:
    return [S42Element((1, 0, 2, 3), False), S42Element((1, 2, 3, 0), False), S42Element((0, 1, 2, 3), True)]


@dataclass
class EmbeddingRecord:
    images: dict  # label -> Intertwiner
    homomorphism: bool
    injective: bool

    def image_of(self, h: S42Element) -> Perm:
        return self.images[h.label()].perm

    def to_json(self) -> dict:
        return {
            "generators": [self.images[g.label()].to_json() for g in generators()],
            "homomorphism": self.homomorphism,
            "injective": self.injective,
        }


def induced_embedding_s42() -> tuple[EmbeddingRecord, CheckReport]:
    """Images of all 48 elements, with homomorphism, sign and cycle-type checks."""
    start = time.perf_counter()
    elems = s42_elements()
    images = {}
    failures = []
    for h in elems:
        try:
            images[h.label()] = intertwiner(h)
        except NoIntertwinerError as exc:
            failures.append(str(exc))
    hom = not failures and all(
        images[(a * b).label()].perm == images[a.label()].perm * images[b.label()].perm for a in elems for b in elems
    )
    injective = not failures and len({im.perm for im in images.values()}) == len(elems)
    sign_ok = not failures and all(images[h.label()].x0_sign == h.sign for h in elems)
    transpositions = [h for h in elems if not h.swap and sorted(Perm([i + 1 for i in h.sigma]).cycle_type) == [1, 1, 2]]
    nonstandard = not failures and all(images[h.label()].perm.cycle_type == (2, 2, 2) for h in transpositions)
    identity_ok = not failures and images[S42Element((0, 1, 2, 3), False).label()].perm.is_identity()
    record = EmbeddingRecord(images, hom, injective)
    swap = images.get(S42Element((0, 1, 2, 3), True).label())
    ok = hom and injective and sign_ok and nonstandard and identity_ok
    rep = report(
        "s42_induced_embedding",
        ok,
        witness={"failures": failures, "homomorphism": hom, "injective": injective, "sign": sign_ok,
                 "transpositions_222": nonstandard},
        details={
            "elements": len(elems),
            "transposition_image_cycle_types": sorted({str(images[h.label()].perm.cycle_type) for h in transpositions}) if not failures else None,
            "swap_image": swap.to_json() if swap else None,
        },
        started=start,
    )
    return record, rep


def embedding_check() -> CheckReport:
    return induced_embedding_s42()[1]
