"""Class functions stored element-wise on an explicit finite group.

The carrier is a tuple of group elements: either :class:`Perm` objects or pairs
``(perm, e)`` with ``e`` in {0, 1} representing elements of ``S_n x mu2``.
Values are exact scalars (rationals, or elements of a real quadratic field such
as Q(sqrt 5)).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from ..algebra.scalars import Scalar, conjugate, field_of, format_scalar, normalize_rational
from ..groups.perm import Perm
from ..groups.subgroup import Subgroup
from .partitions import Partition, as_partition, label, mn_character


class CharacterError(ValueError):
    pass


# -- element helpers (Perm or (Perm, e) pairs) ----------------------------------


def _mul(a, b):
    if isinstance(a, Perm):
        return a * b
    return (a[0] * b[0], (a[1] + b[1]) % 2)


def _inv(a):
    if isinstance(a, Perm):
        return a.inverse()
    return (a[0].inverse(), a[1])


def _pow(a, k: int):
    if isinstance(a, Perm):
        return a**k
    return (a[0] ** k, (a[1] * k) % 2)


def _perm_part(a) -> Perm:
    return a if isinstance(a, Perm) else a[0]


def _complex_conjugate(x: Scalar) -> Scalar:
    d = field_of(x)
    return conjugate(x) if d is not None and d < 0 else x


def cycle_type_on(g: Perm, points: Sequence[int] | None) -> Partition:
    """Cycle type of ``g`` restricted to the ``g``-stable set ``points``."""
    if points is None:
        return g.cycle_type
    pts = set(points)
    out = []
    for c in g.cycles:
        if c[0] in pts:
            if not set(c) <= pts:
                raise CharacterError(f"{g} does not preserve {sorted(pts)}")
            out.append(len(c))
    return tuple(sorted(out, reverse=True))


class ClassFunction:
    """A function on the elements of a finite group, constant on conjugacy classes."""

    def __init__(self, elements: Iterable, values: Mapping | Callable, name: str = ""):
        self.elements = tuple(elements)
        if callable(values):
            self.values = {g: values(g) for g in self.elements}
        else:
            self.values = {g: values[g] for g in self.elements}
        self.name = name

    # -- constructors -------------------------------------------------------
    @classmethod
    def irreducible(cls, lam: Sequence[int], group: Iterable, on: Sequence[int] | None = None) -> "ClassFunction":
        """The S_n irreducible ``R(lam)`` evaluated on ``group`` (optionally via its action on ``on``)."""
        lam = as_partition(lam)
        elems = tuple(group)
        vals = {g: mn_character(lam, cycle_type_on(_perm_part(g), on)) for g in elems}
        return cls(elems, vals, label(lam))

    @classmethod
    def trivial(cls, group: Iterable) -> "ClassFunction":
        elems = tuple(group)
        return cls(elems, {g: 1 for g in elems}, "1")

    @classmethod
    def sign(cls, group: Iterable) -> "ClassFunction":
        elems = tuple(group)
        return cls(elems, {g: _perm_part(g).sign for g in elems}, "sign")

    # -- basic protocol -----------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.elements)

    def __call__(self, g) -> Scalar:
        return self.values[g]

    def identity_element(self):
        for g in self.elements:
            p = _perm_part(g)
            if p.is_identity() and (isinstance(g, Perm) or g[1] == 0):
                return g
        raise CharacterError("carrier has no identity")

    @property
    def degree(self) -> Scalar:
        return self.values[self.identity_element()]

    def _check_same(self, other: "ClassFunction") -> None:
        if set(self.elements) != set(other.elements):
            raise CharacterError("class functions live on different groups")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check_same(other)
        return ClassFunction(self.elements, {g: self.values[g] + other.values[g] for g in self.elements},
                             f"{self.name}+{other.name}")

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check_same(other)
        return ClassFunction(self.elements, {g: self.values[g] - other.values[g] for g in self.elements})

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._check_same(other)
            return ClassFunction(self.elements, {g: self.values[g] * other.values[g] for g in self.elements})
        return ClassFunction(self.elements, {g: other * self.values[g] for g in self.elements})

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, ClassFunction)
            and set(self.elements) == set(other.elements)
            and all(self.values[g] == other.values[g] for g in self.elements)
        )

    def __repr__(self):
        return f"ClassFunction({self.name or '?'}, order={self.order}, degree={format_scalar(self.degree)})"

    # -- structure ----------------------------------------------------------
    def inner(self, other: "ClassFunction") -> Scalar:
        """Frobenius inner product (1/|G|) sum chi(g) conj(psi(g))."""
        self._check_same(other)
        total = 0
        for g in self.elements:
            total = total + self.values[g] * _complex_conjugate(other.values[g])
        return _exact_div(total, self.order)

    def is_class_function(self) -> bool:
        for g in self.elements:
            for x in self.elements[:64]:
                h = _mul(_mul(x, g), _inv(x))
                if self.values[h] != self.values[g]:
                    return False
        return True

    def restrict(self, H: Iterable) -> "ClassFunction":
        elems = tuple(H)
        missing = [g for g in elems if g not in self.values]
        if missing:
            raise CharacterError("subgroup is not contained in the carrier")
        return ClassFunction(elems, {g: self.values[g] for g in elems}, f"Res({self.name})")

    def pullback(self, phi: Callable, elements: Iterable) -> "ClassFunction":
        """``chi o phi`` on ``elements`` for a homomorphism ``phi`` into the carrier."""
        elems = tuple(elements)
        return ClassFunction(elems, {g: self.values[phi(g)] for g in elems}, f"{self.name}o phi")

    def to_json(self) -> dict:
        return {"name": self.name, "order": self.order, "degree": format_scalar(self.degree)}


def _exact_div(x: Scalar, n: int) -> Scalar:
    if isinstance(x, (int, Fraction)):
        return normalize_rational(Fraction(x) / n)
    return x / n


def induce(phi: ClassFunction, G: Iterable) -> ClassFunction:
    """Induced class function: (Ind phi)(g) = (1/|H|) sum_{x in G} phi°(x g x^-1)."""
    G = tuple(G)
    Gset = set(G)
    if not all(h in Gset for h in phi.elements):
        raise CharacterError("H is not contained in G")
    vals = {}
    for g in G:
        total = 0
        for x in G:
            c = _mul(_mul(x, g), _inv(x))
            v = phi.values.get(c)
            if v is not None:
                total = total + v
        vals[g] = _exact_div(total, phi.order)
    return ClassFunction(G, vals, f"Ind({phi.name})")


def decompose(chi: ClassFunction, table: Sequence[ClassFunction]) -> dict[str, int]:
    """Multiplicities of the irreducibles in ``table``; exact residual check."""
    mult: dict[str, int] = {}
    residual = chi
    for psi in table:
        m = chi.inner(psi)
        if not (isinstance(m, int) and m >= 0):
            raise CharacterError(f"non-integral or negative multiplicity {format_scalar(m)} of {psi.name}")
        if m:
            mult[psi.name] = m
            residual = residual - m * psi
    if any(v != 0 for v in residual.values.values()):
        raise CharacterError("character is not a combination of the supplied irreducibles")
    return mult


def format_decomposition(mult: Mapping[str, int]) -> str:
    return " + ".join(name if m == 1 else f"{m}*{name}" for name, m in mult.items()) or "0"


def sym_power_character(chi: ClassFunction, k: int) -> ClassFunction:
    """Character of Sym^k by Newton's recursion."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    elems = chi.elements
    sym: list[dict] = [{g: 1 for g in elems}]
    powers = {m: {g: chi.values[_pow(g, m)] for g in elems} for m in range(1, k + 1)}
    for j in range(1, k + 1):
        cur = {}
        for g in elems:
            total = 0
            for m in range(1, j + 1):
                total = total + powers[m][g] * sym[j - m][g]
            cur[g] = _exact_div(total, j)
        sym.append(cur)
    return ClassFunction(elems, sym[k], f"Sym^{k}({chi.name})")


def invariant_rank(chi: ClassFunction, H: Iterable) -> int:
    """Multiplicity of the trivial character in the restriction to ``H``; must be a natural number."""
    res = chi.restrict(H)
    total = 0
    for g in res.elements:
        total = total + res.values[g]
    r = _exact_div(total, res.order)
    if not (isinstance(r, int) and r >= 0):
        raise CharacterError(f"invariant rank {format_scalar(r)} is not a nonnegative integer")
    return r


def group_elements(G) -> tuple:
    return tuple(G.elements) if isinstance(G, Subgroup) else tuple(G)
