"""Polynomial and scalar matrices: determinants, rank, kernels, resultants."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .poly import NotDivisibleError, Poly, PolyRing, exact_divide
from .scalars import Scalar, divide, normalize_rational


class PolyMatrix:
    """A rectangular matrix of polynomials over one ring."""

    __slots__ = ("ring", "rows", "ncols", "entries")

    def __init__(self, entries: Sequence[Sequence[Poly | Scalar]], ring: PolyRing):
        self.ring = ring
        rows = []
        for row in entries:
            rows.append(tuple(e if isinstance(e, Poly) else ring.const(e) for e in row))
        if rows and len({len(r) for r in rows}) != 1:
            raise ValueError("matrix rows have different lengths")
        self.entries = tuple(rows)
        self.rows = len(rows)
        self.ncols = len(rows[0]) if rows else 0

    def __getitem__(self, ij: tuple[int, int]) -> Poly:
        return self.entries[ij[0]][ij[1]]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.ncols

    def is_symmetric(self) -> bool:
        return self.rows == self.ncols and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows)
            for j in range(i)
        )

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            self.ring,
        )

    def scale(self, c: Scalar | Poly) -> "PolyMatrix":
        return PolyMatrix([[e * c for e in row] for row in self.entries], self.ring)

    def __mul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ncols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.ncols):
                acc = self.ring.zero()
                for k in range(self.ncols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(out, self.ring)

    def map(self, fn: Callable[[Poly], Poly], ring: PolyRing | None = None) -> "PolyMatrix":
        out = [[fn(e) for e in row] for row in self.entries]
        return PolyMatrix(out, ring or (out[0][0].ring if out and out[0] else self.ring))

    def trace(self) -> Poly:
        acc = self.ring.zero()
        for i in range(min(self.rows, self.ncols)):
            acc = acc + self.entries[i][i]
        return acc

    def evaluate(self, point) -> "ScalarMatrix":
        return ScalarMatrix([[e.evaluate(point) for e in row] for row in self.entries])

    def bilinear(self, left: Sequence[Poly], right: Sequence[Poly]) -> Poly:
        """The form ``left^T * M * right``."""
        acc = self.ring.zero()
        for i, a in enumerate(left):
            for j, b in enumerate(right):
                e = self.entries[i][j]
                if e:
                    acc = acc + a * e * b
        return acc

    def quadratic_form(self, v: Sequence[Poly]) -> Poly:
        return self.bilinear(v, v)

    def determinant(self) -> Poly:
        return determinant(self)

    def __repr__(self):
        return "PolyMatrix([" + ", ".join(
            "[" + ", ".join(str(e) for e in row) + "]" for row in self.entries
        ) + "])"


def determinant(m: PolyMatrix) -> Poly:
    """Exact determinant: cofactor expansion up to 4x4, Bareiss elimination beyond."""
    if m.rows != m.ncols:
        raise ValueError(f"determinant of a non-square {m.rows}x{m.ncols} matrix")
    n = m.rows
    if n == 0:
        return m.ring.one()
    if n <= 4:
        return _cofactor_det([list(r) for r in m.entries], m.ring)
    return bareiss_det([list(r) for r in m.entries], m.ring)


def _cofactor_det(a: list[list[Poly]], ring: PolyRing) -> Poly:
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = ring.zero()
    for j in range(n):
        if a[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        term = a[0][j] * _cofactor_det(minor, ring)
        total = total + term if j % 2 == 0 else total - term
    return total


def bareiss_det(a: list[list[Poly]], ring: PolyRing) -> Poly:
    """Fraction-free (Bareiss) determinant of a square polynomial matrix."""
    n = len(a)
    a = [list(r) for r in a]
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return ring.zero()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = piv * a[i][j] - aik * a[k][j]
                if prev.is_constant():
                    c = prev.constant_value()
                    a[i][j] = num if c == 1 else num.scale(divide(1, c))
                else:
                    q = exact_divide(num, prev)
                    if q is None:
                        raise NotDivisibleError("Bareiss step failed: inexact division")
                    a[i][j] = q
            a[i][k] = ring.zero()
        prev = piv
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


# ---------------------------------------------------------------------------
# scalar matrices
# ---------------------------------------------------------------------------


class ScalarMatrix:
    """A rectangular matrix of exact scalars with exact rank / kernel computation."""

    __slots__ = ("entries", "rows", "ncols")

    def __init__(self, entries: Sequence[Sequence[Scalar]]):
        rows = [tuple(normalize_rational(Fraction(x)) if isinstance(x, (int, Fraction)) else x for x in r) for r in entries]
        if rows and len({len(r) for r in rows}) != 1:
            raise ValueError("matrix rows have different lengths")
        self.entries = tuple(rows)
        self.rows = len(rows)
        self.ncols = len(rows[0]) if rows else 0

    @classmethod
    def identity(cls, n: int) -> "ScalarMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.ncols

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    def __eq__(self, other):
        return isinstance(other, ScalarMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __mul__(self, other):
        if isinstance(other, ScalarMatrix):
            if self.ncols != other.rows:
                raise ValueError("shape mismatch")
            return ScalarMatrix(
                [
                    [sum((self.entries[i][k] * other.entries[k][j] for k in range(self.ncols)), 0)
                     for j in range(other.ncols)]
                    for i in range(self.rows)
                ]
            )
        return ScalarMatrix([[x * other for x in r] for r in self.entries])

    __rmul__ = __mul__

    def __add__(self, other: "ScalarMatrix") -> "ScalarMatrix":
        return ScalarMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: "ScalarMatrix") -> "ScalarMatrix":
        return ScalarMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def transpose(self) -> "ScalarMatrix":
        return ScalarMatrix([list(c) for c in zip(*self.entries)]) if self.rows else ScalarMatrix([])

    def apply(self, v: Sequence[Scalar]) -> list[Scalar]:
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        return [sum((a * b for a, b in zip(r, v)), 0) for r in self.entries]

    def is_symmetric(self) -> bool:
        return self.rows == self.ncols and all(
            self.entries[i][j] == self.entries[j][i] for i in range(self.rows) for j in range(i)
        )

    def determinant(self) -> Scalar:
        if self.rows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        return scalar_bareiss_det([list(r) for r in self.entries])

    def rref(self) -> tuple[list[list[Scalar]], list[int]]:
        return rref([list(r) for r in self.entries], self.ncols)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> list[list[Scalar]]:
        return kernel(self)

    def to_json(self):
        from .scalars import format_scalar

        return [[format_scalar(x) for x in r] for r in self.entries]

    def __repr__(self):
        return f"ScalarMatrix({[[str(x) for x in r] for r in self.entries]})"


def scalar_bareiss_det(a: list[list[Scalar]]) -> Scalar:
    n = len(a)
    if n == 0:
        return 1
    a = [list(r) for r in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = divide(piv * a[i][j] - a[i][k] * a[k][j], prev)
            a[i][k] = 0
        prev = piv
    d = a[n - 1][n - 1]
    return -d if sign == -1 else d


def rref(a: list[list[Scalar]], ncols: int) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form (exact); returns (matrix, pivot columns)."""
    a = [list(r) for r in a]
    pivots: list[int] = []
    r = 0
    nrows = len(a)
    for c in range(ncols):
        if r >= nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = divide(1, a[r][c])
        a[r] = [x * inv if x != 0 else 0 for x in a[r]]
        a[r] = [normalize_rational(x) if isinstance(x, Fraction) else x for x in a[r]]
        row_r = a[r]
        nz = [(j, row_r[j]) for j in range(c, ncols) if row_r[j] != 0]
        for i in range(nrows):
            if i != r:
                f = a[i][c]
                if f != 0:
                    row_i = a[i]
                    for j, v in nz:
                        x = row_i[j] - f * v
                        row_i[j] = normalize_rational(x) if isinstance(x, Fraction) else x
        pivots.append(c)
        r += 1
    return a, pivots


def kernel(m: ScalarMatrix) -> list[list[Scalar]]:
    """Exact basis of the right null space (one vector per free column)."""
    red, pivots = m.rref()
    free = [c for c in range(m.ncols) if c not in pivots]
    basis = []
    for f in free:
        v: list[Scalar] = [0] * m.ncols
        v[f] = 1
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def rank_of_vectors(vectors: Sequence[Sequence[Scalar]]) -> int:
    if not vectors:
        return 0
    return ScalarMatrix(vectors).rank()


# ---------------------------------------------------------------------------
# resultants
# ---------------------------------------------------------------------------


def sylvester_matrix(p: Poly, q: Poly, var: str) -> PolyMatrix:
    """Sylvester matrix of ``p`` and ``q`` with respect to ``var``."""
    if p.ring is not q.ring:
        raise ValueError("rings differ")
    ring = p.ring
    cp, cq = p.coeffs_in(var), q.coeffs_in(var)
    m, n = p.degree(var), q.degree(var)
    size = m + n
    zero = ring.zero()
    rows = []
    for i in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[i + m - k] = cp.get(k, zero)
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[i + n - k] = cq.get(k, zero)
        rows.append(row)
    return PolyMatrix(rows, ring)


def resultant(p: Poly, q: Poly, var: str) -> Poly:
    """Resultant of ``p`` and ``q`` in ``var`` via the fraction-free Sylvester determinant."""
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant with the zero polynomial")
    m, n = p.degree(var), q.degree(var)
    if m <= 0 or n <= 0:
        raise ValueError(f"resultant needs positive degree in {var}")
    s = sylvester_matrix(p, q, var)
    return bareiss_det([list(r) for r in s.entries], p.ring)


def univariate_gcd(p: Poly, q: Poly, var: str) -> Poly:
    """Monic gcd of two univariate polynomials (Euclid over the coefficient field)."""
    others = [n for n in p.ring.names if n != var]
    for f in (p, q):
        if any(f.degree(n) > 0 for n in others):
            raise ValueError("univariate_gcd expects polynomials in a single variable")
    a, b = p, q
    while not b.is_zero():
        a, b = b, univariate_rem(a, b, var)
    return a.monic() if not a.is_zero() else a


def univariate_rem(a: Poly, b: Poly, var: str) -> Poly:
    db = b.degree(var)
    lb = b.coeffs_in(var)[db].constant_value()
    x = a.ring.gen(var)
    r = a
    while not r.is_zero() and r.degree(var) >= db:
        dr = r.degree(var)
        lr = r.coeffs_in(var)[dr].constant_value()
        r = r - b * (x ** (dr - db)).scale(divide(lr, lb))
    return r
