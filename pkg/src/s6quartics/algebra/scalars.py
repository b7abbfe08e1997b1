"""Exact scalars: rationals and elements of a single quadratic field Q(sqrt(d)).

Rationals are represented by plain ``int`` (when integral) or
:class:`fractions.Fraction`.  Quadratic irrationalities are
:class:`QuadraticNumber` instances ``a + b*sqrt(d)`` with ``b != 0``; any
arithmetic result whose irrational part cancels is demoted back to a rational,
so equality between scalars is always a plain ``==``.

Combining two quadratic numbers with different ``d`` raises
:class:`FieldMismatchError` -- the toolkit never builds field towers.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]
Scalar = Union[int, Fraction, "QuadraticNumber"]


class FieldMismatchError(ValueError):
    """Raised when two quadratic numbers from different fields are combined."""


def squarefree_part(n: int) -> tuple[int, int]:
    """Return ``(s, f)`` with ``n == s * f**2`` and ``s`` squarefree (sign kept in ``s``)."""
    if n == 0:
        raise ValueError("zero has no squarefree part")
    sign = -1 if n < 0 else 1
    n = abs(n)
    s, f = 1, 1
    p = 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            f *= p
        if n % p == 0:
            n //= p
            s *= p
        p += 1 if p == 2 else 2
    return sign * s * n, f


def normalize_rational(x: Rational) -> Rational:
    """Demote integral fractions to ``int`` so hot loops stay in integer arithmetic."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class QuadraticNumber:
    """The element ``a + b*sqrt(d)`` of Q(sqrt(d)); ``d`` squarefree, ``d != 0, 1``."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a: Rational, b: Rational, d: int):
        if not isinstance(d, int) or d in (0, 1):
            raise ValueError(f"invalid radicand {d!r}")
        s, f = squarefree_part(d)
        if s != d:
            raise ValueError(f"radicand {d} is not squarefree")
        self.a = normalize_rational(Fraction(a))
        self.b = normalize_rational(Fraction(b))
        self.d = d

    # -- construction helpers -------------------------------------------------
    @staticmethod
    def make(a: Rational, b: Rational, d: int) -> Scalar:
        """Build ``a + b*sqrt(d)``, returning a rational when ``b == 0``."""
        if b == 0:
            return normalize_rational(Fraction(a))
        return QuadraticNumber(a, b, d)

    @staticmethod
    def sqrt(n: Rational) -> Scalar:
        """Exact square root of a rational, possibly as a quadratic number."""
        n = Fraction(n)
        if n == 0:
            return 0
        num = n.numerator * n.denominator
        s, f = squarefree_part(num)
        coeff = Fraction(f, n.denominator)
        if s == 1:
            return normalize_rational(coeff)
        return QuadraticNumber(0, coeff, s)

    # -- arithmetic -------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, QuadraticNumber):
            if other.d != self.d:
                raise FieldMismatchError(
                    f"cannot combine Q(sqrt({self.d})) with Q(sqrt({other.d}))"
                )
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return other, 0
        return None

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return QuadraticNumber.make(self.a + c[0], self.b + c[1], self.d)

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return QuadraticNumber.make(self.a - c[0], self.b - c[1], self.d)

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return QuadraticNumber.make(c[0] - self.a, c[1] - self.b, self.d)

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        a, b = c
        return QuadraticNumber.make(
            self.a * a + self.d * self.b * b, self.a * b + self.b * a, self.d
        )

    __rmul__ = __mul__

    def norm(self) -> Rational:
        """Field norm ``a^2 - d*b^2``."""
        return normalize_rational(Fraction(self.a * self.a - self.d * self.b * self.b))

    def conjugate(self) -> "QuadraticNumber":
        return QuadraticNumber(self.a, -self.b, self.d)

    def inverse(self) -> Scalar:
        n = Fraction(self.norm())
        return QuadraticNumber.make(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if isinstance(other, QuadraticNumber):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            o = Fraction(other)
            return QuadraticNumber.make(self.a / o, self.b / o, self.d)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result: Scalar = 1
        base: Scalar = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / hashing ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, QuadraticNumber):
            return self.d == other.d and self.a == other.a and self.b == other.b
        return False  # b != 0, so never equal to a rational

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return True

    def __repr__(self):
        return f"QuadraticNumber({self.a}, {self.b}, {self.d})"

    def __str__(self):
        return format_scalar(self)


# ---------------------------------------------------------------------------
# free functions on scalars
# ---------------------------------------------------------------------------

def is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, QuadraticNumber)) and not isinstance(x, bool)


def scalar_kind(x: Scalar) -> str:
    """``"rational"`` or ``"quadratic"``."""
    return "quadratic" if isinstance(x, QuadraticNumber) else "rational"


def field_of(x: Scalar) -> int | None:
    """Radicand of the field a scalar lives in (``None`` for rationals)."""
    return x.d if isinstance(x, QuadraticNumber) else None


def conjugate(x: Scalar) -> Scalar:
    return x.conjugate() if isinstance(x, QuadraticNumber) else x


def inverse(x: Scalar) -> Scalar:
    if isinstance(x, QuadraticNumber):
        return x.inverse()
    if x == 0:
        raise ZeroDivisionError("inverse of zero")
    return normalize_rational(Fraction(1) / x)


def divide(x: Scalar, y: Scalar) -> Scalar:
    if isinstance(x, QuadraticNumber) or isinstance(y, QuadraticNumber):
        return x * inverse(y)
    if y == 0:
        raise ZeroDivisionError("division by zero")
    return normalize_rational(Fraction(x) / y)


def canonical(x: Scalar) -> Scalar:
    if isinstance(x, Fraction):
        return normalize_rational(x)
    return x


def is_integer_scalar(x: Scalar) -> bool:
    return isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1)


def sqrt_in_field(x: Scalar, d: int | None = None) -> Scalar | None:
    """An exact square root of ``x`` inside Q or Q(sqrt(d)); ``None`` if none exists.

    For rational ``x`` the root may open the quadratic field ``Q(sqrt(s))`` with
    ``s`` the squarefree part of ``x``; if ``d`` is given, that field must be
    ``Q(sqrt(d))`` or the root must be rational.
    """
    if isinstance(x, QuadraticNumber):
        # (p + q sqrt d)^2 = a + b sqrt d  =>  p^2 + d q^2 = a, 2pq = b
        # p^2 is a root of  X^2 - a X + d b^2 / 4 = 0
        a, b, dd = Fraction(x.a), Fraction(x.b), x.d
        disc = a * a - dd * b * b
        root = sqrt_in_field(disc)
        if root is None or isinstance(root, QuadraticNumber):
            return None
        for p2 in ((a + root) / 2, (a - root) / 2):
            p = sqrt_in_field(p2)
            if p is None or isinstance(p, QuadraticNumber) or p == 0:
                continue
            q = b / (2 * Fraction(p))
            cand = QuadraticNumber.make(p, q, dd)
            if cand * cand == x:
                return cand
        return None
    r = QuadraticNumber.sqrt(x)
    if isinstance(r, QuadraticNumber) and d is not None and r.d != d:
        return None
    return r


def format_rational(x: Rational) -> str:
    x = normalize_rational(x)
    if isinstance(x, int):
        return str(x)
    return f"{x.numerator}/{x.denominator}"


def format_scalar(x: Scalar) -> str:
    """Canonical text: ``"3/2"`` for rationals, ``"(a+b*sqrt(d))"`` for quadratics."""
    if isinstance(x, QuadraticNumber):
        b = x.b
        if b == 1:
            irr = f"sqrt({x.d})"
        elif b == -1:
            irr = f"-sqrt({x.d})"
        else:
            irr = f"{format_rational(b)}*sqrt({x.d})"
        if x.a == 0:
            return f"({irr})"
        sep = "" if irr.startswith("-") else "+"
        return f"({format_rational(x.a)}{sep}{irr})"
    return format_rational(x)


def scalar_to_json(x: Scalar):
    """JSON-friendly form (a string) of an exact scalar."""
    return format_scalar(x)


def primitive_cube_root_of_unity() -> QuadraticNumber:
    """omega = (-1 + sqrt(-3)) / 2."""
    return QuadraticNumber(Fraction(-1, 2), Fraction(1, 2), -3)


def gcd_rationals(values) -> Fraction:
    """Positive gcd of a collection of rationals (gcd of numerators / lcm of denominators)."""
    g_num, l_den = 0, 1
    for v in values:
        v = Fraction(v)
        g_num = math.gcd(g_num, v.numerator)
        l_den = l_den * v.denominator // math.gcd(l_den, v.denominator)
    if g_num == 0:
        return Fraction(0)
    return Fraction(g_num, l_den)
