"""Sparse multivariate polynomials with exact coefficients.

A :class:`PolyRing` fixes an ordered tuple of variable names; a :class:`Poly`
is a dictionary from exponent tuples to nonzero scalars.  Terms are presented
in graded reverse lexicographic order with respect to the declared variable
order, which makes the text form (and everything derived from it) canonical.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .scalars import (
    QuadraticNumber,
    Scalar,
    divide,
    format_rational,
    format_scalar,
    gcd_rationals,
    is_scalar,
    normalize_rational,
)


class ContextMismatchError(ValueError):
    """Raised when polynomials from different variable contexts are combined."""


class NotDivisibleError(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


def grevlex_key(exp: tuple[int, ...]) -> tuple:
    """Sort key: larger key means larger monomial in graded reverse lex order."""
    return (sum(exp), tuple(-e for e in reversed(exp)))


class PolyRing:
    """A polynomial ring Q[x_1..x_n] (coefficients may also be quadratic numbers)."""

    _cache: dict[tuple[str, ...], "PolyRing"] = {}

    def __new__(cls, names: Iterable[str]):
        names = tuple(names)
        ring = cls._cache.get(names)
        if ring is None:
            if len(set(names)) != len(names):
                raise ValueError(f"duplicate variable names in {names}")
            ring = super().__new__(cls)
            ring.names = names
            ring.nvars = len(names)
            ring.index = {n: i for i, n in enumerate(names)}
            ring.zero_exp = (0,) * len(names)
            cls._cache[names] = ring
        return ring

    def __reduce__(self):
        return (PolyRing, (self.names,))

    def __repr__(self):
        return f"PolyRing({', '.join(self.names)})"

    # constructors
    def gens(self) -> tuple["Poly", ...]:
        return tuple(self.gen(n) for n in self.names)

    def gen(self, name: str) -> "Poly":
        i = self.index[name]
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): 1})

    def __getitem__(self, name: str) -> "Poly":
        return self.gen(name)

    def const(self, c: Scalar) -> "Poly":
        return Poly(self, {self.zero_exp: c} if c != 0 else {})

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def monomial(self, exp: Sequence[int], coeff: Scalar = 1) -> "Poly":
        return Poly(self, {tuple(exp): coeff} if coeff != 0 else {})

    def parse(self, text: str) -> "Poly":
        from .parse import parse_poly

        return parse_poly(text, self)

    def extend(self, extra: Iterable[str]) -> "PolyRing":
        return PolyRing(self.names + tuple(n for n in extra if n not in self.index))


class Poly:
    """An immutable sparse polynomial over exact scalars."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[tuple[int, ...], Scalar] | None = None):
        self.ring = ring
        clean = {}
        if terms:
            for e, c in terms.items():
                if c != 0:
                    if isinstance(c, Fraction):
                        c = normalize_rational(c)
                    clean[e] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: PolyRing, terms: dict) -> "Poly":
        """Build from an already-clean dict (no zero coefficients)."""
        p = object.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    # -- coercion ---------------------------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring is not self.ring:
                raise ContextMismatchError(
                    f"variable contexts differ: {self.ring.names} vs {other.ring.names}"
                )
            return other
        if is_scalar(other):
            return self.ring.const(other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    # -- ring operations --------------------------------------------------------
    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        res = dict(self.terms)
        for e, c in o.terms.items():
            v = res.get(e)
            if v is None:
                res[e] = c
            else:
                v = v + c
                if v == 0:
                    del res[e]
                else:
                    res[e] = normalize_rational(v) if isinstance(v, Fraction) else v
        return Poly._raw(self.ring, res)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if is_scalar(other):
            return self.scale(other)
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.terms, o.terms
        if len(a) < len(b):
            a, b = b, a
        res: dict = {}
        get = res.get
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = tuple([x + y for x, y in zip(e1, e2)])
                v = get(e)
                res[e] = c1 * c2 if v is None else v + c1 * c2
        out = {}
        for e, c in res.items():
            if c != 0:
                out[e] = normalize_rational(c) if isinstance(c, Fraction) else c
        return Poly._raw(self.ring, out)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "Poly":
        if c == 0:
            return Poly._raw(self.ring, {})
        if c == 1:
            return self
        out = {}
        for e, v in self.terms.items():
            w = v * c
            if w != 0:
                out[e] = normalize_rational(w) if isinstance(w, Fraction) else w
        return Poly._raw(self.ring, out)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if is_scalar(other):
            return self.scale(divide(1, other))
        if isinstance(other, Poly):
            q = exact_divide(self, other)
            if q is None:
                raise NotDivisibleError("polynomial is not divisible")
            return q
        return NotImplemented

    # -- predicates / queries ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring is other.ring and self.terms == other.terms
        if is_scalar(other):
            if other == 0:
                return not self.terms
            return self.terms == {self.ring.zero_exp: other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.names, frozenset(self.terms.items())))
        return self._hash

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring.zero_exp in self.terms)

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get(self.ring.zero_exp, 0)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree(self, var: str | None = None) -> int:
        if var is None:
            return self.total_degree()
        if not self.terms:
            return -1
        i = self.ring.index[var]
        return max(e[i] for e in self.terms)

    def weighted_degrees(self, weights: Sequence[int]) -> set[int]:
        return {sum(w * x for w, x in zip(weights, e)) for e in self.terms}

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        if weights is None:
            weights = (1,) * self.ring.nvars
        return len(self.weighted_degrees(weights)) <= 1

    def variables(self) -> tuple[str, ...]:
        used = [False] * self.ring.nvars
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used[i] = True
        return tuple(n for n, u in zip(self.ring.names, used) if u)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Scalar]]:
        """Terms in decreasing graded reverse lexicographic order."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[tuple[int, ...], Scalar]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grevlex_key)
        return e, self.terms[e]

    def coefficients(self) -> list[Scalar]:
        return list(self.terms.values())

    def field(self) -> int | None:
        """Radicand of the quadratic field of the coefficients, if any."""
        for c in self.terms.values():
            if isinstance(c, QuadraticNumber):
                return c.d
        return None

    # -- calculus / evaluation --------------------------------------------------
    def diff(self, var: str) -> "Poly":
        i = self.ring.index[var]
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                e2 = e[:i] + (k - 1,) + e[i + 1:]
                out[e2] = c * k
        return Poly._raw(self.ring, out)

    def gradient(self) -> list["Poly"]:
        return [self.diff(n) for n in self.ring.names]

    def evaluate(self, point: Sequence[Scalar] | Mapping[str, Scalar]) -> Scalar:
        """Evaluate at a full point (sequence in ring order, or a name->value map)."""
        if isinstance(point, Mapping):
            vals = [point[n] for n in self.ring.names]
        else:
            vals = list(point)
            if len(vals) != self.ring.nvars:
                raise ValueError(
                    f"expected {self.ring.nvars} coordinates, got {len(vals)}"
                )
        powers: list[dict[int, Scalar]] = [dict() for _ in vals]
        total: Scalar = 0
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    cache = powers[i]
                    pw = cache.get(k)
                    if pw is None:
                        pw = vals[i] ** k
                        cache[k] = pw
                    term = term * pw
            total = total + term
        return normalize_rational(total) if isinstance(total, Fraction) else total

    def partial_evaluate(self, values: Mapping[str, Scalar]) -> "Poly":
        """Substitute scalars for some variables, staying in the same ring."""
        idx = [(self.ring.index[n], v) for n, v in values.items()]
        out: dict = {}
        for e, c in self.terms.items():
            e2 = list(e)
            term = c
            for i, v in idx:
                if e[i]:
                    term = term * v ** e[i]
                    e2[i] = 0
            if term == 0:
                continue
            t = tuple(e2)
            out[t] = out.get(t, 0) + term
        return Poly(self.ring, out)

    def substitute(self, images: Sequence["Poly"] | Mapping[str, "Poly"], target: PolyRing | None = None) -> "Poly":
        """Compose: replace each variable by a polynomial in a common target ring.

        ``images`` is either one image per variable (ring order) or a mapping for
        a subset of variables (others are kept, which requires the target ring to
        contain them).
        """
        if isinstance(images, Mapping):
            if target is None:
                rings = {p.ring for p in images.values() if isinstance(p, Poly)}
                target = rings.pop() if len(rings) == 1 else self.ring
            imgs = []
            for n in self.ring.names:
                if n in images:
                    im = images[n]
                    imgs.append(im if isinstance(im, Poly) else target.const(im))
                else:
                    imgs.append(target.gen(n))
        else:
            imgs = list(images)
            if len(imgs) != self.ring.nvars:
                raise ValueError(
                    f"substitution arity mismatch: {len(imgs)} images for {self.ring.nvars} variables"
                )
            if target is None:
                rings = {p.ring for p in imgs if isinstance(p, Poly)}
                if len(rings) > 1:
                    raise ContextMismatchError("substitution images live in different rings")
                target = rings.pop() if rings else self.ring
            imgs = [im if isinstance(im, Poly) else target.const(im) for im in imgs]
        for im in imgs:
            if im.ring is not target:
                raise ContextMismatchError("substitution images live in different rings")
        power_cache: list[dict[int, Poly]] = [dict() for _ in imgs]

        def power(i: int, k: int) -> Poly:
            cache = power_cache[i]
            p = cache.get(k)
            if p is None:
                if k == 1:
                    p = imgs[i]
                else:
                    half = power(i, k // 2)
                    p = half * half
                    if k % 2:
                        p = p * imgs[i]
                cache[k] = p
            return p

        acc: dict = {}
        for e, c in self.terms.items():
            term = target.const(c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            for e2, c2 in term.terms.items():
                v = acc.get(e2)
                acc[e2] = c2 if v is None else v + c2
        return Poly(target, acc)

    def to_ring(self, ring: PolyRing) -> "Poly":
        """Re-embed into a ring that contains all variables actually used."""
        used = self.variables()
        missing = [n for n in used if n not in ring.index]
        if missing:
            raise ContextMismatchError(f"variables {missing} missing from target ring")
        pos = [ring.index.get(n) for n in self.ring.names]
        out = {}
        for e, c in self.terms.items():
            e2 = [0] * ring.nvars
            for i, k in enumerate(e):
                if k:
                    e2[pos[i]] = k
            out[tuple(e2)] = c
        return Poly._raw(ring, out)

    def coeffs_in(self, var: str) -> dict[int, "Poly"]:
        """View as a univariate polynomial in ``var``: degree -> coefficient poly."""
        i = self.ring.index[var]
        groups: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[i]
            e2 = e[:i] + (0,) + e[i + 1:]
            groups.setdefault(k, {})[e2] = c
        return {k: Poly._raw(self.ring, t) for k, t in groups.items()}

    def homogenize(self, var: str) -> "Poly":
        """Homogenize with respect to ``var`` (which must be a ring variable)."""
        i = self.ring.index[var]
        deg = self.total_degree()
        out = {}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[i] += deg - sum(e)
            out[tuple(e2)] = c
        return Poly(self.ring, out)

    # -- content ----------------------------------------------------------------
    def rational_content(self) -> Fraction:
        """Positive gcd of the coefficients (rational coefficients only)."""
        if any(isinstance(c, QuadraticNumber) for c in self.terms.values()):
            raise ValueError("content is only defined for rational coefficients")
        return gcd_rationals(self.terms.values())

    def primitive(self) -> "Poly":
        """Divide by rational content and make the leading coefficient positive."""
        if not self.terms:
            return self
        c = self.rational_content()
        _, lc = self.leading_term()
        if lc < 0:
            c = -c
        return self.scale(Fraction(1) / c)

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        _, lc = self.leading_term()
        return self.scale(divide(1, lc))

    # -- text -------------------------------------------------------------------
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r}, ring={self.ring.names})"

    def to_json(self) -> str:
        return format_poly(self)


def _format_monomial(ring: PolyRing, e: tuple[int, ...]) -> str:
    parts = []
    for n, k in zip(ring.names, e):
        if k == 1:
            parts.append(n)
        elif k > 1:
            parts.append(f"{n}^{k}")
    return "*".join(parts)


def format_poly(p: Poly) -> str:
    """Canonical text, e.g. ``"3/2*x1^2*x2 - x3"``."""
    if not p.terms:
        return "0"
    pieces: list[str] = []
    for idx, (e, c) in enumerate(p.sorted_terms()):
        mono = _format_monomial(p.ring, e)
        if isinstance(c, QuadraticNumber):
            sign, body = "+", format_scalar(c)
            text = f"{body}*{mono}" if mono else body
        else:
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if mono:
                text = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            else:
                text = format_rational(mag)
        if idx == 0:
            pieces.append(text if sign == "+" else f"-{text}")
        else:
            pieces.append(f" {sign} {text}")
    return "".join(pieces)


# ---------------------------------------------------------------------------
# division
# ---------------------------------------------------------------------------

def _exp_divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def exact_divide(p: Poly, q: Poly) -> Poly | None:
    """Return ``r`` with ``p == q*r`` or ``None`` when ``q`` does not divide ``p``."""
    if q.ring is not p.ring:
        raise ContextMismatchError("exact_divide: rings differ")
    if not q.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p.terms:
        return p
    ring = p.ring
    lq_e, lq_c = q.leading_term()
    inv_lc = divide(1, lq_c)
    q_rest = [(e, c) for e, c in q.terms.items() if e != lq_e]
    rem = dict(p.terms)
    quot: dict = {}
    while rem:
        le = max(rem, key=grevlex_key)
        lc = rem[le]
        if not _exp_divides(lq_e, le):
            return None
        m = tuple(x - y for x, y in zip(le, lq_e))
        coef = lc * inv_lc
        if isinstance(coef, Fraction):
            coef = normalize_rational(coef)
        quot[m] = coef
        del rem[le]
        for e, c in q_rest:
            e2 = tuple(x + y for x, y in zip(e, m))
            v = rem.get(e2, 0) - c * coef
            if v == 0:
                rem.pop(e2, None)
            else:
                rem[e2] = normalize_rational(v) if isinstance(v, Fraction) else v
    return Poly._raw(ring, quot)


def divides(q: Poly, p: Poly) -> bool:
    return exact_divide(p, q) is not None


def proportionality_factor(p: Poly, q: Poly) -> Scalar | None:
    """Scalar ``c`` with ``p == c*q`` (``None`` if they are not proportional)."""
    if q.ring is not p.ring:
        raise ContextMismatchError("rings differ")
    if not q.terms:
        return 0 if not p.terms else None
    if set(p.terms) != set(q.terms):
        return None
    e0 = next(iter(q.terms))
    c = divide(p.terms[e0], q.terms[e0])
    for e, v in q.terms.items():
        if p.terms[e] != v * c:
            return None
    return c


@lru_cache(maxsize=None)
def elementary_symmetric(ring: PolyRing, names: tuple[str, ...], k: int) -> Poly:
    """The k-th elementary symmetric polynomial of the given variables."""
    from itertools import combinations

    total = ring.zero()
    for combo in combinations(names, k):
        term = ring.one()
        for n in combo:
            term = term * ring.gen(n)
        total = total + term
    return total


def elementary_symmetric_of(polys: Sequence[Poly], k: int) -> Poly:
    """e_k evaluated on a list of polynomials."""
    from itertools import combinations

    ring = polys[0].ring
    total = ring.zero()
    for combo in combinations(polys, k):
        term = ring.one()
        for p in combo:
            term = term * p
        total = total + term
    return total


def power_sum(polys: Sequence[Poly], k: int) -> Poly:
    ring = polys[0].ring
    total = ring.zero()
    for p in polys:
        total = total + p ** k
    return total
