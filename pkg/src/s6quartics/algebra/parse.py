"""Parser for the canonical polynomial / scalar text format.

Grammar (usual precedence, ``^`` and ``**`` right-associative)::

    expr   := term (('+'|'-') term)*
    term   := unary (('*'|'/') unary)*
    unary  := ('+'|'-') unary | power
    power  := atom (('^'|'**') unary)?
    atom   := INT | NAME | 'sqrt' '(' expr ')' | '(' expr ')'

Division is only allowed by constants (or by exactly dividing polynomials).
``sqrt`` only accepts rational constants.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import Poly, PolyRing, exact_divide
from .scalars import QuadraticNumber, Scalar, divide

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^(),]))")


class ParseError(ValueError):
    pass


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", num))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.toks = _tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise ParseError(f"expected {value!r}, found {tok[1]!r}")
        self.i += 1
        return tok

    def parse(self) -> Poly:
        if not self.toks:
            raise ParseError("empty expression")
        p = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input at token {self.toks[self.i][1]!r}")
        return p

    def expr(self) -> Poly:
        p = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Poly:
        p = self.unary()
        while self.peek()[1] in ("*", "/"):
            op = self.take()[1]
            q = self.unary()
            if op == "*":
                p = p * q
            else:
                if q.is_zero():
                    raise ParseError("division by zero")
                if q.is_constant():
                    p = p.scale(divide(1, q.constant_value()))
                else:
                    r = exact_divide(p, q)
                    if r is None:
                        raise ParseError("division by a non-dividing polynomial")
                    p = r
        return p

    def unary(self) -> Poly:
        tok = self.peek()[1]
        if tok == "-":
            self.take()
            return -self.unary()
        if tok == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.peek()[1] in ("^", "**"):
            self.take()
            ex = self.unary()
            if not ex.is_constant():
                raise ParseError("exponent must be a constant")
            k = ex.constant_value()
            if isinstance(k, QuadraticNumber) or Fraction(k).denominator != 1:
                raise ParseError("exponent must be an integer")
            k = int(k)
            if k < 0:
                if not base.is_constant():
                    raise ParseError("negative powers only for constants")
                return self.ring.const(divide(1, base.constant_value() ** (-k)))
            return base ** k
        return base

    def atom(self) -> Poly:
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return self.ring.const(int(val))
        if kind == "name":
            self.take()
            if val == "sqrt":
                self.take("(")
                inner = self.expr()
                self.take(")")
                if not inner.is_constant():
                    raise ParseError("sqrt of a non-constant")
                c = inner.constant_value()
                if isinstance(c, QuadraticNumber):
                    raise ParseError("sqrt only accepts rational arguments")
                return self.ring.const(QuadraticNumber.sqrt(c))
            if val not in self.ring.index:
                raise ParseError(f"unknown variable {val!r} (context {self.ring.names})")
            return self.ring.gen(val)
        if val == "(":
            self.take()
            p = self.expr()
            self.take(")")
            return p
        raise ParseError(f"unexpected token {val!r}")


def parse_poly(text: str, ring: PolyRing) -> Poly:
    return _Parser(text, ring).parse()


_SCALAR_RING = PolyRing(())


def parse_scalar(text: str) -> Scalar:
    """Parse an exact scalar such as ``"7/10"``, ``"3/sqrt(5)"`` or ``"(1/2+1/2*sqrt(-3))"``."""
    p = parse_poly(text, _SCALAR_RING)
    return p.constant_value()


def parse_point(text: str) -> list[Scalar]:
    """Parse a colon- or comma-separated list of exact scalars, e.g. ``"0:1:1"``."""
    text = text.strip()
    if text.startswith("(") and _matching_paren(text, 0) == len(text) - 1:
        inner = text[1:-1]
        if "," in inner or ":" in inner:
            text = inner
    sep = ":" if ":" in text else ","
    return [parse_scalar(s) for s in _split_top_level(text, sep)]


def _matching_paren(text: str, start: int) -> int:
    depth = 0
    for i in range(start, len(text)):
        if text[i] == "(":
            depth += 1
        elif text[i] == ")":
            depth -= 1
            if depth == 0:
                return i
    return -1


def _split_top_level(text: str, sep: str) -> list[str]:
    depth, cur, out = 0, [], []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [s.strip() for s in out if s.strip()]
