"""Explicit rational maps between P^2 x P^2, P^5 and the Coble ambient P(2, 1^6)."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from ..algebra.matrix import univariate_gcd
from ..algebra.poly import Poly, PolyRing, elementary_symmetric_of
from ..varieties.catalog import COBLE_RING, UV_RING, YZ_RING

THIRD = Fraction(1, 3)
T_RING = PolyRing(("t",))


@dataclass(frozen=True)
class RationalMap:
    """A rational map given by polynomial components.

    ``blocks`` groups component indices by factor of a product target (each block
    is a point of its own projective space); ``weights`` are the target weights
    (a component of weight w has degree w times the common degree).
    """

    name: str
    source: PolyRing
    target: PolyRing
    components: tuple[Poly, ...]
    blocks: tuple[tuple[int, ...], ...] | None = None
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        if len(self.components) != self.target.nvars:
            raise ValueError(f"{self.name}: {len(self.components)} components for {self.target.nvars} target variables")
        if all(c.is_zero() for c in self.components):
            raise ValueError(f"{self.name}: all components vanish")
        for c in self.components:
            if c.ring is not self.source:
                raise ValueError(f"{self.name}: component outside the source ring")

    @property
    def block_list(self) -> tuple[tuple[int, ...], ...]:
        return self.blocks or (tuple(range(len(self.components))),)

    @property
    def degree(self) -> int:
        """Common degree (per unit of target weight)."""
        w = self.weights or (1,) * len(self.components)
        degs = {c.total_degree() // wi for c, wi in zip(self.components, w) if not c.is_zero()}
        if len(degs) != 1:
            raise ValueError(f"{self.name}: components of unequal degree {sorted(degs)}")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        w = self.weights or (1,) * len(self.components)
        try:
            d = self.degree
        except ValueError:
            return False
        return all(c.is_zero() or (c.is_homogeneous() and c.total_degree() == d * wi)
                   for c, wi in zip(self.components, w))

    def pullback(self, f: Poly) -> Poly:
        """f composed with the map (f lives in the target ring)."""
        return f.to_ring(self.target).substitute(list(self.components), self.source)

    def compose(self, inner: "RationalMap") -> "RationalMap":
        """self after inner."""
        if inner.target is not self.source:
            raise ValueError("composition: rings do not match")
        comps = tuple(c.substitute(list(inner.components), inner.source) for c in self.components)
        return RationalMap(f"{self.name}*{inner.name}", inner.source, self.target, comps, self.blocks, self.weights)

    def scaled(self, c) -> "RationalMap":
        """All components multiplied by a scalar (weighted: by c^weight)."""
        w = self.weights or (1,) * len(self.components)
        comps = tuple(p * (c ** wi) for p, wi in zip(self.components, w))
        return RationalMap(self.name, self.source, self.target, comps, self.blocks, self.weights)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "source": list(self.source.names),
            "target": list(self.target.names),
            "components": [str(c) for c in self.components],
        }


def has_common_factor(polys: Sequence[Poly], seed: int = 0, trials: int = 3) -> bool:
    """Randomized test for a common factor of nonzero homogeneous polynomials.

    Restricts to random lines a + t b through the source; a nonconstant common factor
    survives restriction (for b off its zero set), so a constant gcd on some line
    certifies coprimality with high probability.
    """
    polys = [p for p in polys if not p.is_zero()]
    if len(polys) < 2:
        return polys[0].total_degree() > 0 if polys else False
    ring = polys[0].ring
    rng = random.Random(seed)
    t = T_RING.gen("t")
    for _ in range(trials):
        a = [Fraction(rng.randint(-50, 50)) for _ in ring.names]
        b = [Fraction(rng.randint(-50, 50)) for _ in ring.names]
        line = [t * bi + ai for ai, bi in zip(a, b)]
        restricted = [p.substitute(line, T_RING) for p in polys]
        g = restricted[0]
        for r in restricted[1:]:
            if r.is_zero():
                continue
            g = r if g.is_zero() else univariate_gcd(g, r, "t")
        if not g.is_zero() and g.degree("t") == 0:
            return False
    return True


# ---------------------------------------------------------------------------
# the catalog
# ---------------------------------------------------------------------------


def _uv():
    g = UV_RING.gen
    return [g(n) for n in ("u1", "u2", "u3")], [g(n) for n in ("v1", "v2", "v3")]


@lru_cache(maxsize=1)
def toric_projection() -> RationalMap:
    """P^2 x P^2 --> P^5, (u, v) -> (u2v3 : u3v1 : u1v2 : u3v2 : u1v3 : u2v1)."""
    (u1, u2, u3), (v1, v2, v3) = _uv()
    comps = (u2 * v3, u3 * v1, u1 * v2, u3 * v2, u1 * v3, u2 * v1)
    return RationalMap("toric_projection", UV_RING, YZ_RING, comps)


def _yz():
    g = YZ_RING.gen
    return [g(n) for n in ("y1", "y2", "y3")], [g(n) for n in ("z1", "z2", "z3")]


@lru_cache(maxsize=1)
def yz_to_x() -> RationalMap:
    """P^5 --> P^5: x_i = y_i - 2/3 s1(y) + 1/3 s1(z), x_{3+i} = z_i + 1/3 s1(y) - 2/3 s1(z)."""
    from ..varieties.catalog import X_RING

    ys, zs = _yz()
    s1y, s1z = ys[0] + ys[1] + ys[2], zs[0] + zs[1] + zs[2]
    comps = tuple(y - s1y * (2 * THIRD) + s1z * THIRD for y in ys) + tuple(
        z + s1y * THIRD - s1z * (2 * THIRD) for z in zs
    )
    return RationalMap("yz_to_x", YZ_RING, X_RING, comps)


@lru_cache(maxsize=1)
def cubic_involution() -> RationalMap:
    """The involution of the projection of the cubic y1y2y3 = z1z2z3 from (1:...:1):
    w_i -> (s1(y) - s1(z)) w_i - (s2(y) - s2(z))."""
    ys, zs = _yz()
    a = elementary_symmetric_of(ys, 1) - elementary_symmetric_of(zs, 1)
    b = elementary_symmetric_of(ys, 2) - elementary_symmetric_of(zs, 2)
    comps = tuple(a * w - b for w in ys + zs)
    return RationalMap("cubic_involution", YZ_RING, YZ_RING, comps)


def _minors(u, v):
    """D1 = u2v3 - u3v2, D2 = u3v1 - u1v3, D3 = u1v2 - u2v1."""
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


@lru_cache(maxsize=1)
def plane_pair_involution() -> RationalMap:
    """The birational involution of P^2 x P^2 with denominators D1 D2 D3 cleared:
    u'_i = (v_{i+1} - v_{i+2}) / D_i,  v'_i = (u_{i+1} - u_{i+2}) / D_i."""
    u, v = _uv()
    D = _minors(u, v)
    others = [D[1] * D[2], D[0] * D[2], D[0] * D[1]]
    du = [u[1] - u[2], u[2] - u[0], u[0] - u[1]]
    dv = [v[1] - v[2], v[2] - v[0], v[0] - v[1]]
    comps = tuple(dv[i] * others[i] for i in range(3)) + tuple(du[i] * others[i] for i in range(3))
    return RationalMap("plane_pair_involution", UV_RING, UV_RING, comps, blocks=((0, 1, 2), (3, 4, 5)))


def x0_formula(ring: PolyRing = UV_RING) -> Poly:
    g = ring.gen
    u1, u2, u3, v1, v2, v3 = (g(n) for n in ("u1", "u2", "u3", "v1", "v2", "v3"))
    return (-u1 * u3 * v1 * v2 - u1 * u2 * v2 * v3 - u2 * u3 * v1 * v3
            + u1 * u2 * v1 * v3 + u2 * u3 * v1 * v2 + u1 * u3 * v2 * v3)


# coefficient rows (times 1/3) of x1..x6 on the monomials u2v3, u3v1, u1v2, u3v2, u1v3, u2v1
RHO_COEFFICIENTS = (
    (1, -2, -2, 1, 1, 1),
    (-2, 1, -2, 1, 1, 1),
    (-2, -2, 1, 1, 1, 1),
    (1, 1, 1, 1, -2, -2),
    (1, 1, 1, -2, 1, -2),
    (1, 1, 1, -2, -2, 1),
)


@lru_cache(maxsize=2)
def coble_resolution(x0_sign: int = 1) -> RationalMap:
    """P^2 x P^2 --> Coble fourfold in P(2, 1^6): x0 quartic, x1..x6 bilinear."""
    mons = toric_projection().components
    xs = tuple(sum((m * (c * THIRD) for m, c in zip(mons, row)), UV_RING.zero()) for row in RHO_COEFFICIENTS)
    comps = (x0_formula() * x0_sign,) + xs
    name = "coble_resolution" if x0_sign == 1 else "coble_resolution_flipped"
    return RationalMap(name, UV_RING, COBLE_RING, comps, weights=(2, 1, 1, 1, 1, 1, 1))


def ramification_determinant(ring: PolyRing = UV_RING) -> Poly:
    """det [[u1v1, u2v2, u3v3], [u1, u2, u3], [v1, v2, v3]]."""
    from ..algebra.matrix import PolyMatrix, determinant

    g = ring.gen
    u = [g(n) for n in ("u1", "u2", "u3")]
    v = [g(n) for n in ("v1", "v2", "v3")]
    return determinant(PolyMatrix([[u[i] * v[i] for i in range(3)], u, v], ring))


def swap_map(ring: PolyRing = UV_RING) -> RationalMap:
    """(u, v) -> (v, u)."""
    names = ("v1", "v2", "v3", "u1", "u2", "u3")
    return RationalMap("swap", ring, ring, tuple(ring.gen(n) for n in names), blocks=((0, 1, 2), (3, 4, 5)))


def yz_swap() -> RationalMap:
    names = ("z1", "z2", "z3", "y1", "y2", "y3")
    return RationalMap("yz_swap", YZ_RING, YZ_RING, tuple(YZ_RING.gen(n) for n in names))


MAPS = {
    "toric_projection": toric_projection,
    "yz_to_x": yz_to_x,
    "cubic_involution": cubic_involution,
    "plane_pair_involution": plane_pair_involution,
    "coble_resolution": coble_resolution,
}


def get_map(name: str) -> RationalMap:
    try:
        return MAPS[name]()
    except KeyError:
        raise KeyError(f"unknown map {name!r}; known: {', '.join(MAPS)}") from None
