"""Class-group characters of the S6-invariant quartics and the Coble fourfold.

Characters of ``S6 x mu2`` are built as ``R(lam) ⊠ (±1)``; the natural and
twisted S6-characters are their pullbacks along ``g -> (g, 0)`` and
``g -> (g, sign bit of g)``.
"""

from __future__ import annotations

from functools import lru_cache

from ..groups.perm import Perm
from ..groups.subgroup import Subgroup
from .classfunction import CharacterError, ClassFunction
from .partitions import Partition, label, mn_character
from .tables import s_n

# Summands of Cl ⊗ Q as S6-representations (t-pencil members) and as
# S6 x mu2 representations (lam, mu2-character) for the Coble fourfold and X_inf.
PENCIL_SUMMANDS: dict[str, tuple[Partition, ...]] = {
    "X_generic": ((6,), (3, 3)),
    "X_1/2": ((6,), (3, 3), (3, 1, 1, 1)),
    "X_1/6": ((6,), (3, 3), (2, 2, 2)),
    "X_7/10": ((6,), (3, 3), (1, 1, 1, 1, 1, 1)),
}
PRODUCT_SUMMANDS: dict[str, tuple[tuple[Partition, int], ...]] = {
    "Y": (((6,), 1), ((3, 3), -1)),
    "X_inf": (((6,), 1), ((3, 3), -1)),
}
VARIETIES = tuple(PRODUCT_SUMMANDS) + tuple(PENCIL_SUMMANDS)
ACTIONS = ("natural", "twisted", "product")


@lru_cache(maxsize=None)
def s6_times_mu2() -> tuple:
    return tuple((g, e) for e in (0, 1) for g in s_n(6).elements)


def product_character(summands) -> ClassFunction:
    elems = s6_times_mu2()
    vals = {}
    for g, e in elems:
        ct = g.cycle_type
        vals[(g, e)] = sum(mn_character(lam, ct) * (eps if e else 1) for lam, eps in summands)
    name = " + ".join(f"{label(lam)}x({'+' if eps == 1 else '-'}1)" for lam, eps in summands)
    return ClassFunction(elems, vals, name)


def embed(g: Perm, action: str):
    """S6 -> S6 x mu2 along the natural (g, 0) or twisted (g, sign bit) embedding."""
    if action == "natural":
        return (g, 0)
    if action == "twisted":
        return (g, 0 if g.sign == 1 else 1)
    raise ValueError(f"unknown action {action!r}")


def class_group_character(variety: str, action: str = "natural") -> ClassFunction:
    """Character of Cl ⊗ Q for a variety id in :data:`VARIETIES`."""
    if variety in PRODUCT_SUMMANDS:
        chi = product_character(PRODUCT_SUMMANDS[variety])
        if action == "product":
            return chi
        out = chi.pullback(lambda g: embed(g, action), s_n(6).elements)
        out.name = f"Cl({variety}), {action}"
        return out
    if variety in PENCIL_SUMMANDS:
        if action not in ("natural",):
            raise ValueError(f"{variety} only carries the natural S6-action")
        elems = s_n(6).elements
        lams = PENCIL_SUMMANDS[variety]
        chi = ClassFunction(elems, {g: sum(mn_character(lam, g.cycle_type) for lam in lams) for g in elems},
                            " + ".join(label(lam) for lam in lams))
        return chi
    raise ValueError(f"unknown variety id {variety!r}")


def summand_labels(variety: str, action: str = "natural") -> list[str]:
    if variety in PENCIL_SUMMANDS:
        return [label(lam) for lam in PENCIL_SUMMANDS[variety]]
    from .partitions import transpose

    out = []
    for lam, eps in PRODUCT_SUMMANDS[variety]:
        if action == "natural":
            out.append(label(lam))
        elif action == "twisted":
            out.append(label(lam if eps == 1 else transpose(lam)))
        else:
            out.append(f"{label(lam)}x({'+' if eps == 1 else '-'}1)")
    return out


def invariant_rank_mask(chi: ClassFunction, mask: int) -> int:
    """Invariant rank over the subgroup of S6 given by an index bitmask (fast path)."""
    from ..groups.s6 import tables

    t = tables()
    members = t.members(mask)
    total = sum(chi.values[t.perms[i]] for i in members)
    if total % len(members):
        raise CharacterError("non-integral invariant rank")
    r = total // len(members)
    if r < 0:
        raise CharacterError("negative invariant rank")
    return r


def rank_table(variety: str, action: str, rank: int) -> list[int]:
    """Indices of subgroup classes of S6 on which the invariant rank equals ``rank``."""
    from ..groups.lattice import subgroup_classes

    chi = class_group_character(variety, action)
    return [c.index for c in subgroup_classes().classes if invariant_rank_mask(chi, c.rep_mask) == rank]


def mu2_containing_rank(variety: str, H: Subgroup) -> int:
    """Invariant rank over ``H x mu2`` in the product action."""
    from .classfunction import invariant_rank

    chi = class_group_character(variety, "product")
    return invariant_rank(chi, [(g, e) for e in (0, 1) for g in H.elements])
