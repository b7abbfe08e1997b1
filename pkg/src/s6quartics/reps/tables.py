"""Concrete character tables: S_n (via Murnaghan–Nakayama), A5 over Q(sqrt 5), twists."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from ..algebra.scalars import QuadraticNumber
from ..groups.outer import outer_automorphism
from ..groups.perm import Perm
from ..groups.subgroup import Subgroup, alternating_group, symmetric_group
from .classfunction import CharacterError, ClassFunction, _perm_part
from .partitions import Partition, as_partition, label, mn_character, partitions, transpose

# cycle types exchanged by the outer automorphism of S6
OUTER_SWAP: dict[Partition, Partition] = {}
for _a, _b in [((2, 1, 1, 1, 1), (2, 2, 2)), ((3, 1, 1, 1), (3, 3)), ((6,), (3, 2, 1))]:
    OUTER_SWAP[_a], OUTER_SWAP[_b] = _b, _a


@lru_cache(maxsize=None)
def s_n(n: int) -> Subgroup:
    """S_n as a degree-n permutation group."""
    return symmetric_group(n)


def sn_irreducibles(G: Subgroup | Iterable, n: int = 6, on: Sequence[int] | None = None) -> list[ClassFunction]:
    return [ClassFunction.irreducible(lam, G, on) for lam in partitions(n)]


def sign_twist(chi: ClassFunction) -> ClassFunction:
    return ClassFunction(chi.elements, {g: _perm_part(g).sign * chi.values[g] for g in chi.elements},
                         f"sgn*{chi.name}")


def outer_twist(chi: ClassFunction) -> ClassFunction:
    """``chi o alpha`` for a class function on the whole of S6 (element-wise)."""
    alpha = outer_automorphism()
    if len(chi.elements) != 720:
        raise CharacterError("the outer twist needs a class function on all of S6")
    return ClassFunction(chi.elements, {g: chi.values[alpha(g)] for g in chi.elements}, f"bar({chi.name})")


def outer_twist_by_cycle_type(values: dict[Partition, int]) -> dict[Partition, int]:
    """Outer twist of a cycle-type-indexed S6 class function."""
    return {mu: values[OUTER_SWAP.get(mu, mu)] for mu in values}


def irreducible_label_of(chi: ClassFunction, n: int = 6, on: Sequence[int] | None = None) -> str:
    """Label of the S_n irreducible equal to ``chi`` (or raise)."""
    for lam in partitions(n):
        if ClassFunction.irreducible(lam, chi.elements, on) == chi:
            return label(lam)
    raise CharacterError("not an irreducible character")


# -- A5 --------------------------------------------------------------------------

SQRT5 = QuadraticNumber.sqrt(5)
GOLDEN = (1 + SQRT5) / 2
GOLDEN_BAR = (1 - SQRT5) / 2

# class keys: "1", "2", "3", "5A", "5B"
A5_TABLE: dict[str, dict[str, object]] = {
    "R1": {"1": 1, "2": 1, "3": 1, "5A": 1, "5B": 1},
    "R3'": {"1": 3, "2": -1, "3": 0, "5A": GOLDEN, "5B": GOLDEN_BAR},
    "R3''": {"1": 3, "2": -1, "3": 0, "5A": GOLDEN_BAR, "5B": GOLDEN},
    "R4": {"1": 4, "2": 0, "3": 1, "5A": -1, "5B": -1},
    "R5": {"1": 5, "2": 1, "3": -1, "5A": 0, "5B": 0},
}
A5_CLASS_SIZES = {"1": 1, "2": 15, "3": 20, "5A": 12, "5B": 12}


def a5_classes(H: Subgroup) -> dict[Perm, str]:
    """Conjugacy-class keys for the elements of a group isomorphic to A5.

    ``5A`` is the H-conjugacy class of the smallest element of order 5, ``5B``
    the class of its square.
    """
    if H.order != 60:
        raise CharacterError("not a group of order 60")
    elems = H.elements
    c = min(g for g in elems if g.order == 5)
    cls_a = {x * c * x.inverse() for x in elems}
    out = {}
    for g in elems:
        o = g.order
        if o == 5:
            out[g] = "5A" if g in cls_a else "5B"
        else:
            out[g] = {1: "1", 2: "2", 3: "3"}[o]
    return out


def a5_irreducibles(H: Subgroup) -> list[ClassFunction]:
    classes = a5_classes(H)
    return [ClassFunction(H.elements, {g: row[classes[g]] for g in H.elements}, name)
            for name, row in A5_TABLE.items()]


def a5_standard() -> Subgroup:
    """A5 as a degree-5 permutation group."""
    return alternating_group(5)
