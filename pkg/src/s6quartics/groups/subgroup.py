"""Finite permutation groups given by explicit element lists."""

from __future__ import annotations

from collections import Counter
from functools import cached_property
from math import factorial
from typing import Iterable, Sequence

from .perm import Perm, cycle_type_label
from .s6 import tables


class GroupError(ValueError):
    pass


def closure(gens: Iterable[Perm], n: int = 6) -> frozenset[Perm]:
    """All products of the generators (breadth-first)."""
    gens = [g for g in gens if not g.is_identity()]
    if n == 6:
        t = tables()
        mask = t.closure([t.index[g] for g in gens])
        return frozenset(t.to_perms(mask))
    e = Perm.identity(n)
    elems = [e]
    seen = {e}
    i = 0
    while i < len(elems):
        a = elems[i]
        i += 1
        for g in gens:
            c = a * g
            if c not in seen:
                seen.add(c)
                elems.append(c)
    return frozenset(seen)


class Subgroup:
    """A subgroup of S_n stored as its complete, sorted element list.

    Closure of the generators is recomputed and compared on construction, and
    Lagrange divisibility is asserted, so every instance is a genuine group.
    """

    def __init__(self, elements: Iterable[Perm], generators: Sequence[Perm] | None = None, n: int = 6):
        elems = frozenset(elements)
        if not elems:
            raise GroupError("a subgroup must contain the identity")
        self.n = n
        if any(p.n != n for p in elems):
            raise GroupError("mixed degrees")
        if generators is None:
            generators = small_generating_set(elems, n)
        self.generators = tuple(generators)
        if closure(self.generators, n) != elems:
            raise GroupError("element list is not the closure of its generators")
        if factorial(n) % len(elems):
            raise GroupError("order does not divide n!")
        self.elements = tuple(sorted(elems))
        self.element_set = elems

    # -- basic protocol ---------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g: Perm) -> bool:
        return g in self.element_set

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.element_set == other.element_set

    def __hash__(self):
        return hash(self.element_set)

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators) or "()"
        return f"Subgroup(order={self.order}, generators=[{gens}])"

    def to_json(self) -> dict:
        return {"order": self.order, "generators": [str(g) for g in self.generators]}

    # -- derived data -----------------------------------------------------
    @cached_property
    def mask(self) -> int:
        if self.n != 6:
            raise GroupError("bitmask view only exists for S6")
        return tables().mask_of(self.elements)

    def conjugate(self, x: Perm) -> "Subgroup":
        xi = x.inverse()
        return Subgroup(
            (x * h * xi for h in self.elements),
            [x * g * xi for g in self.generators],
            self.n,
        )

    def is_subgroup_of(self, other: "Subgroup") -> bool:
        return self.element_set <= other.element_set

    @cached_property
    def census(self) -> dict[str, int]:
        """Number of elements per (nontrivial-part) cycle type."""
        c = Counter(cycle_type_label(g.cycle_type) for g in self.elements)
        return dict(sorted(c.items(), key=lambda kv: (len(kv[0]), kv[0])))

    def census_signature(self) -> str:
        return " ".join(f"{k}x{v}" for k, v in self.census.items())

    @cached_property
    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for a in gens for b in gens)

    def in_alternating(self) -> bool:
        return all(g.sign == 1 for g in self.generators)

    def orbits_on_points(self) -> list[tuple[int, ...]]:
        remaining = set(range(1, self.n + 1))
        out = []
        while remaining:
            i = min(remaining)
            orb = {g(i) for g in self.elements}
            out.append(tuple(sorted(orb)))
            remaining -= orb
        return out

    def is_transitive(self) -> bool:
        return len(self.orbits_on_points()) == 1

    def derived_subgroup(self) -> "Subgroup":
        comms = {a * b * a.inverse() * b.inverse() for a in self.elements for b in self.generators}
        return generate(comms, self.n)

    def is_perfect(self) -> bool:
        return self.derived_subgroup().order == self.order


def small_generating_set(elems: frozenset[Perm], n: int = 6) -> list[Perm]:
    """A short deterministic generating set (greedy over sorted elements, largest order first)."""
    target = len(elems)
    ordered = sorted(elems, key=lambda g: (-g.order, g.images))
    gens: list[Perm] = []
    current = frozenset([Perm.identity(n)])
    for g in ordered:
        if len(current) == target:
            break
        if g not in current:
            gens.append(g)
            current = closure(gens, n)
    return gens


def generate(gens: Iterable[Perm], n: int = 6) -> Subgroup:
    """The subgroup generated by ``gens``."""
    gens = list(gens)
    if not gens:
        return Subgroup([Perm.identity(n)], [], n)
    elems = closure(gens, n)
    return Subgroup(elems, [g for g in gens if not g.is_identity()] or None, n)


def symmetric_group(n: int = 6, on: Sequence[int] | None = None) -> Subgroup:
    """Sym(on) inside S_n (default: all of S_n)."""
    pts = list(on) if on is not None else list(range(1, n + 1))
    if len(pts) <= 1:
        return generate([], n)
    gens = [Perm.from_cycles([pts[:2]], n)]
    if len(pts) > 2:
        gens.append(Perm.from_cycles([pts], n))
    return generate(gens, n)


def alternating_group(n: int = 6, on: Sequence[int] | None = None) -> Subgroup:
    s = symmetric_group(n, on)
    return Subgroup([g for g in s if g.sign == 1], None, n)


def intersection(a: Subgroup, b: Subgroup) -> Subgroup:
    return Subgroup(a.element_set & b.element_set, None, a.n)
