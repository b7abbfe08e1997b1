"""Explicit varieties: the invariant quartic pencil and its relatives.

Every variety is a list of defining polynomials in a fixed variable context.
Parameters (``t``, ``tau``, ``s``) are exact scalars, or ``None`` to keep them
as an extra polynomial variable of the same name.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ..algebra.poly import Poly, PolyRing
from ..algebra.scalars import Scalar

X_NAMES = ("x1", "x2", "x3", "x4", "x5", "x6")
X_RING = PolyRing(X_NAMES)
COBLE_RING = PolyRing(("x0",) + X_NAMES)
U_RING = PolyRing(("u1", "u2", "u3"))
UV_RING = PolyRing(("u1", "u2", "u3", "v1", "v2", "v3"))
W_RING = PolyRing(("w1", "w2", "w3"))
YZ_RING = PolyRing(("y1", "y2", "y3", "z1", "z2", "z3"))

# weights of the Coble ambient P(2, 1^6)
COBLE_WEIGHTS = (2, 1, 1, 1, 1, 1, 1)

INFINITY = "inf"
PARAMETER_NAMES = ("t", "tau", "s")


@dataclass
class VarietyDef:
    """A projective variety cut out by explicit equations."""

    id: str
    ring: PolyRing
    equations: list[Poly]
    parameters: dict[str, object] = field(default_factory=dict)
    weights: tuple[int, ...] | None = None
    description: str = ""

    @property
    def hypersurface(self) -> Poly:
        """The last equation (the 'main' one; earlier equations are linear constraints)."""
        return self.equations[-1]

    def contains(self, point) -> bool:
        return all(f.evaluate(point) == 0 for f in self.equations)

    def is_homogeneous(self) -> bool:
        """Homogeneity in the ambient grading (symbolic parameters have weight 0)."""
        weights = self.weights
        if weights is None:
            weights = tuple(0 if n in PARAMETER_NAMES else 1 for n in self.ring.names)
        return all(f.is_homogeneous(weights) for f in self.equations)

    def to_json(self) -> dict:
        from ..report import jsonable

        return {
            "id": self.id,
            "variables": list(self.ring.names),
            "parameters": jsonable(self.parameters),
            "equations": [str(f) for f in self.equations],
        }


# ---------------------------------------------------------------------------
# building blocks
# ---------------------------------------------------------------------------


def _ring_with(base: PolyRing, param: str | None) -> PolyRing:
    return base.extend([param]) if param else base


def hyperplane(ring: PolyRing = X_RING) -> Poly:
    """x1 + ... + x6."""
    return sum((ring.gen(n) for n in X_NAMES), ring.zero())


def power_sum_x(ring: PolyRing, k: int) -> Poly:
    return sum((ring.gen(n) ** k for n in X_NAMES), ring.zero())


def pencil_quartic(t: Scalar | None, ring: PolyRing | None = None) -> Poly:
    """sum x^4 - t (sum x^2)^2; ``t=None`` keeps ``t`` as a variable."""
    if ring is None:
        ring = _ring_with(X_RING, "t" if t is None else None)
    tt = ring.gen("t") if t is None else t
    return power_sum_x(ring, 4) - power_sum_x(ring, 2) ** 2 * tt


def igusa_quartic(ring: PolyRing = X_RING) -> Poly:
    return pencil_quartic(Fraction(1, 4), ring)


def coble_equation(ring: PolyRing = COBLE_RING) -> Poly:
    """x0^2 - (Igusa quartic)."""
    return ring.gen("x0") ** 2 - igusa_quartic(ring)


def x_tau_equation(tau: Scalar | None, ring: PolyRing | None = None) -> Poly:
    """x0 + tau/2 * sum x^2 (the extra equation of the Coble sub-threefold)."""
    if ring is None:
        ring = _ring_with(COBLE_RING, "tau" if tau is None else None)
    tt = ring.gen("tau") if tau is None else tau
    return ring.gen("x0") + power_sum_x(ring, 2) * tt * Fraction(1, 2)


def perazzo_cubic(ring: PolyRing = YZ_RING) -> Poly:
    g = ring.gen
    return g("y1") * g("y2") * g("y3") - g("z1") * g("z2") * g("z3")


def wiman_edge_sextics(ring: PolyRing = W_RING) -> tuple[Poly, Poly]:
    """The two sextics whose pencil is the Wiman--Edge pencil (in plane coordinates)."""
    w1, w2, w3 = ring.gen("w1"), ring.gen("w2"), ring.gen("w3")
    p0 = (w2**2 - w3**2) * (w3**2 - w1**2) * (w1**2 - w2**2)
    s2 = w1**2 + w2**2 + w3**2
    s4 = w1**4 + w2**4 + w3**4
    s6 = w1**6 + w2**6 + w3**6
    pinf = s6 + s2 * s4 - w1**2 * w2**2 * w3**2 * 12
    return p0, pinf


def wiman_edge_member(s: Scalar | None, ring: PolyRing | None = None) -> Poly:
    if ring is None:
        ring = _ring_with(W_RING, "s" if s is None else None)
    p0, pinf = wiman_edge_sextics(ring)
    ss = ring.gen("s") if s is None else s
    return p0 + pinf * ss


WIMAN_EDGE_BASE_POINTS = ((1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1))


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------


def _x_t(params):
    t = params.get("t")
    if t == INFINITY:
        ring = X_RING
        q = power_sum_x(ring, 2)
        return VarietyDef("X_t", ring, [hyperplane(ring), q * q], {"t": INFINITY},
                          description="the double quadric X_inf")
    ring = _ring_with(X_RING, "t" if t is None else None)
    return VarietyDef("X_t", ring, [hyperplane(ring), pencil_quartic(t, ring)], {"t": t},
                      description="invariant quartic in the hyperplane sum x = 0")


def _igusa(params):
    return VarietyDef("igusa", X_RING, [hyperplane(), igusa_quartic()], {"t": Fraction(1, 4)})


def _burkhardt(params):
    return VarietyDef("burkhardt", X_RING, [hyperplane(), pencil_quartic(Fraction(1, 2))], {"t": Fraction(1, 2)})


def _coble(params):
    return VarietyDef("coble", COBLE_RING, [hyperplane(COBLE_RING), coble_equation()], {},
                      weights=COBLE_WEIGHTS, description="double cover of P^4 branched in the Igusa quartic")


def _x_tau(params):
    tau = params.get("tau")
    ring = _ring_with(COBLE_RING, "tau" if tau is None else None)
    eqs = [hyperplane(ring), coble_equation(ring), x_tau_equation(tau, ring)]
    return VarietyDef("X_tau", ring, eqs, {"tau": tau}, weights=COBLE_WEIGHTS + ((0,) if tau is None else ()))


def _q_inf(params):
    return VarietyDef("Q_inf", X_RING, [hyperplane(), power_sum_x(X_RING, 2)], {})


def _perazzo(params):
    return VarietyDef("perazzo", YZ_RING, [perazzo_cubic()], {})


def _verra(params):
    from .verra import verra_form

    tau = params.get("tau")
    f = verra_form(tau)
    return VarietyDef("verra", f.ring, [f], {"tau": tau}, description="bidegree (2,2) divisor in P2 x P2")


def _wiman_edge(params):
    s = params.get("s")
    f = wiman_edge_member(s)
    return VarietyDef("wiman_edge", f.ring, [f], {"s": s}, description="plane sextic of the Wiman--Edge pencil")


BUILDERS: dict[str, Callable[[dict], VarietyDef]] = {
    "X_t": _x_t,
    "igusa": _igusa,
    "burkhardt": _burkhardt,
    "coble": _coble,
    "X_tau": _x_tau,
    "Q_inf": _q_inf,
    "perazzo": _perazzo,
    "verra": _verra,
    "wiman_edge": _wiman_edge,
}

PARAMETERS = {"X_t": ("t",), "X_tau": ("tau",), "verra": ("tau",), "wiman_edge": ("s",)}


def build(variety_id: str, **params) -> VarietyDef:
    """Construct a catalog variety; unknown ids raise ``KeyError``."""
    try:
        builder = BUILDERS[variety_id]
    except KeyError:
        raise KeyError(f"unknown variety id {variety_id!r}; known: {', '.join(BUILDERS)}") from None
    allowed = PARAMETERS.get(variety_id, ())
    extra = set(params) - set(allowed)
    if extra:
        raise ValueError(f"{variety_id} takes parameters {allowed}, got {sorted(extra)}")
    return builder(params)

