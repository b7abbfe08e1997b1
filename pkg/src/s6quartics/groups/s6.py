"""Indexed model of the symmetric group S6 used by the enumeration kernels.

Elements are numbered 0..719 in lexicographic order of their one-line images;
multiplication, inversion and conjugation become table lookups, and a subgroup
is a Python ``int`` bitmask over these indices.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .perm import Perm

N = 6
ORDER = 720


class S6Tables:
    """Multiplication/inverse tables for S6 (built once, read-only afterwards)."""

    def __init__(self):
        self.perms: list[Perm] = [Perm(p) for p in permutations(range(1, N + 1))]
        self.index: dict[Perm, int] = {p: i for i, p in enumerate(self.perms)}
        idx = {p.images: i for i, p in enumerate(self.perms)}
        imgs = [p.images for p in self.perms]
        self.mul: list[list[int]] = []
        for a in imgs:
            row = []
            for b in imgs:
                row.append(idx[tuple(a[j - 1] for j in b)])
            self.mul.append(row)
        self.inv: list[int] = [idx[p.inverse().images] for p in self.perms]
        self.identity: int = idx[tuple(range(1, N + 1))]
        self.cycle_type: list[tuple[int, ...]] = [p.cycle_type for p in self.perms]
        self.sign: list[int] = [p.sign for p in self.perms]
        self.order: list[int] = [p.order for p in self.perms]
        self.all_mask: int = (1 << ORDER) - 1

    # -- element helpers ----------------------------------------------------
    def conj(self, x: int, h: int) -> int:
        """Index of ``x h x^-1``."""
        return self.mul[self.mul[x][h]][self.inv[x]]

    def power(self, g: int, k: int) -> int:
        r = self.identity
        for _ in range(k):
            r = self.mul[r][g]
        return r

    # -- subgroup helpers ---------------------------------------------------
    def closure(self, gens: list[int], limit: int | None = None) -> int | None:
        """Bitmask of the subgroup generated by ``gens``; ``None`` if it exceeds ``limit``."""
        mul = self.mul
        elems = [self.identity]
        mask = 1 << self.identity
        gens = [g for g in gens if g != self.identity]
        i = 0
        while i < len(elems):
            a = elems[i]
            i += 1
            row = mul[a]
            for g in gens:
                c = row[g]
                bit = 1 << c
                if not mask & bit:
                    mask |= bit
                    elems.append(c)
                    if limit is not None and len(elems) > limit:
                        return None
        return mask

    @staticmethod
    def members(mask: int) -> list[int]:
        bits = bin(mask)[:1:-1]
        return [i for i, b in enumerate(bits) if b == "1"]

    def conjugate_mask(self, mask: int, x: int, members: list[int] | None = None) -> int:
        m = 0
        for h in members if members is not None else self.members(mask):
            m |= 1 << self.conj(x, h)
        return m

    def to_perms(self, mask: int) -> list[Perm]:
        return [self.perms[i] for i in self.members(mask)]

    def mask_of(self, perms) -> int:
        m = 0
        for p in perms:
            m |= 1 << self.index[p]
        return m


@lru_cache(maxsize=1)
def tables() -> S6Tables:
    return S6Tables()
