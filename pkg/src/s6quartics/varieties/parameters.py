"""The parameter maps t(tau) = (tau^2+1)/4 and s(tau) = (tau^3 - tau)/(5 tau^2 + 3)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..algebra.poly import Poly, PolyRing
from ..algebra.scalars import QuadraticNumber, Scalar, divide, format_scalar, sqrt_in_field
from .catalog import INFINITY

TAU_RING = PolyRing(("tau",))
Value = object  # Scalar or INFINITY

DISCRIMINANT_SET = (Fraction(1, 4), Fraction(1, 2), Fraction(1, 6), Fraction(7, 10))


def _num_den() -> tuple[Poly, Poly]:
    tau = TAU_RING.gen("tau")
    return tau**3 - tau, tau**2 * 5 + 3


def s_of_tau(tau: Value) -> Value:
    if tau == INFINITY:
        return INFINITY
    num, den = _num_den()
    d = den.evaluate([tau])
    if d == 0:
        return INFINITY
    return divide(num.evaluate([tau]), d)


def t_of_tau(tau: Value) -> Value:
    if tau == INFINITY:
        return INFINITY
    return divide(tau * tau + 1, 4)


def derivative_numerator() -> Poly:
    """Numerator N'D - ND' of s'(tau)."""
    num, den = _num_den()
    return num.diff("tau") * den - num * den.diff("tau")


def _even_quartic_roots(p: Poly) -> list[Scalar]:
    """Roots of a polynomial a tau^4 + b tau^2 + c via the quadratic formula in tau^2."""
    c = {k: v.constant_value() for k, v in p.coeffs_in("tau").items()}
    if set(c) - {0, 2, 4}:
        raise ValueError("expected an even polynomial of degree 4")
    a, b, cc = c.get(4, 0), c.get(2, 0), c.get(0, 0)
    disc = b * b - 4 * a * cc
    r = sqrt_in_field(disc)
    if r is None or isinstance(r, QuadraticNumber):
        raise ValueError("tau^2 roots are not rational")
    roots = []
    for sq in (divide(-b + r, 2 * a), divide(-b - r, 2 * a)):
        root = sqrt_in_field(sq)
        roots += [root, -root]
    return roots


@dataclass
class RamificationPoint:
    tau: Scalar
    s: Value
    simple: bool

    def to_json(self):
        return {"tau": format_scalar(self.tau), "s": _fmt(self.s), "simple": self.simple}


def ramification_points() -> list[RamificationPoint]:
    """Zeros of s'(tau), each certified simple (the numerator's derivative is nonzero there).

    The point at infinity is unramified: deg(numerator) - deg(denominator) = 1.
    """
    n = derivative_numerator()
    dn = n.diff("tau")
    out = []
    for r in _even_quartic_roots(n):
        if n.evaluate([r]) != 0:
            raise AssertionError(f"claimed root {r} does not annihilate s'")
        out.append(RamificationPoint(tau=r, s=s_of_tau(r), simple=dn.evaluate([r]) != 0))
    return out


def _fmt(v: Value) -> str:
    return v if v == INFINITY else format_scalar(v)


# columns of the special-value table: label -> (upper-sign tau, lower-sign tau)
def _special_columns() -> list[tuple[str, list[Value]]]:
    sqrt_m3 = QuadraticNumber.sqrt(-3)
    sqrt5 = QuadraticNumber.sqrt(5)
    sqrt_m35 = QuadraticNumber.sqrt(Fraction(-3, 5))
    return [
        ("0", [0]),
        ("+-1", [1, -1]),
        ("+-1/sqrt(-3)", [divide(1, sqrt_m3), divide(-1, sqrt_m3)]),
        ("+-sqrt(-3)", [sqrt_m3, -sqrt_m3]),
        ("-+3/sqrt(5)", [divide(-3, sqrt5), divide(3, sqrt5)]),
        ("+-1/sqrt(5)", [divide(1, sqrt5), divide(-1, sqrt5)]),
        ("inf", [INFINITY]),
        ("+-sqrt(-3/5)", [sqrt_m35, -sqrt_m35]),
    ]


def special_value_table() -> list[dict]:
    """For each special tau column: the values of s and t (listed per sign choice)."""
    rows = []
    for label, taus in _special_columns():
        rows.append({
            "tau": label,
            "tau_values": [_fmt(x) for x in taus],
            "s": [_fmt(s_of_tau(x)) for x in taus],
            "t": [_fmt(t_of_tau(x)) for x in taus],
        })
    return rows


def discriminant_set_tau() -> list[Scalar]:
    """tau values over the discriminant set: 0, +-1, +-1/sqrt(-3), +-3/sqrt(5)."""
    sqrt_m3 = QuadraticNumber.sqrt(-3)
    sqrt5 = QuadraticNumber.sqrt(5)
    return [0, 1, -1, divide(1, sqrt_m3), divide(-1, sqrt_m3), divide(3, sqrt5), divide(-3, sqrt5)]


def t_image_of_discriminant_set() -> dict[str, int]:
    """Multiplicity with which t maps the tau-discriminant set onto each element of the discriminant set."""
    counts: dict = {}
    for tau in discriminant_set_tau():
        t = t_of_tau(tau)
        counts[t] = counts.get(t, 0) + 1
    return {format_scalar(t): counts[t] for t in sorted(counts)}
