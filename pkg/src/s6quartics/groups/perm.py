"""Permutations of {1..n} in one-line form with cycle-notation I/O."""

from __future__ import annotations

import re
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence


class Perm:
    """A permutation of {1..n}; ``images[i-1]`` is the image of ``i``.

    Composition follows function composition: ``(g * h)(i) == g(h(i))``.
    """

    __slots__ = ("images", "__dict__")

    def __init__(self, images: Sequence[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation: {images}")
        self.images = images

    # -- constructors -------------------------------------------------------
    @classmethod
    def identity(cls, n: int = 6) -> "Perm":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int = 6) -> "Perm":
        img = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            cyc = list(cyc)
            if any(c < 1 or c > n for c in cyc) or seen & set(cyc) or len(set(cyc)) != len(cyc):
                raise ValueError(f"invalid cycle {cyc}")
            seen |= set(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b
        return cls(img)

    @classmethod
    def parse(cls, text: str, n: int = 6) -> "Perm":
        """Parse cycle notation such as ``"(1 2)(3 4 5)"`` or ``"()"``."""
        text = text.strip()
        if text in ("", "()", "e", "id"):
            return cls.identity(n)
        cycles = re.findall(r"\(([^()]*)\)", text)
        if "".join(f"({c})" for c in cycles).replace(" ", "") != text.replace(" ", ""):
            raise ValueError(f"cannot parse permutation {text!r}")
        return cls.from_cycles(
            [[int(x) for x in re.split(r"[\s,]+", c.strip()) if x] for c in cycles], n
        )

    # -- group structure ----------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        if not isinstance(other, Perm):
            return NotImplemented
        img = self.images
        return Perm.__new_unchecked(tuple(img[j - 1] for j in other.images))

    @classmethod
    def __new_unchecked(cls, images: tuple[int, ...]) -> "Perm":
        p = object.__new__(cls)
        p.images = images
        return p

    def inverse(self) -> "Perm":
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Perm.__new_unchecked(tuple(inv))

    def __pow__(self, k: int) -> "Perm":
        if k < 0:
            return self.inverse() ** (-k)
        result = Perm.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate_by(self, x: "Perm") -> "Perm":
        """``x * self * x^-1``."""
        return x * self * x.inverse()

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, start=1))

    # -- invariants ---------------------------------------------------------
    @cached_property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """All cycles (including fixed points), each starting at its minimum."""
        seen = [False] * (self.n + 1)
        out = []
        for i in range(1, self.n + 1):
            if not seen[i]:
                cyc = []
                j = i
                while not seen[j]:
                    seen[j] = True
                    cyc.append(j)
                    j = self.images[j - 1]
                out.append(tuple(cyc))
        return tuple(out)

    @cached_property
    def cycle_type(self) -> tuple[int, ...]:
        """Cycle type as a partition of n (weakly decreasing, includes 1s)."""
        return tuple(sorted((len(c) for c in self.cycles), reverse=True))

    @property
    def nontrivial_cycle_type(self) -> tuple[int, ...]:
        """Cycle type without fixed points, e.g. ``(2, 2)`` for ``(1 2)(3 4)``."""
        return tuple(c for c in self.cycle_type if c > 1)

    @property
    def sign(self) -> int:
        return -1 if sum(c - 1 for c in self.cycle_type) % 2 else 1

    @property
    def order(self) -> int:
        o = 1
        for c in self.cycle_type:
            o = o * c // gcd(o, c)
        return o

    # -- protocol -----------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other: "Perm"):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Perm({self.cycle_notation()!r})"

    def __str__(self):
        return self.cycle_notation()

    def cycle_notation(self) -> str:
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles if len(c) > 1)
        return body or "()"


def transposition(i: int, j: int, n: int = 6) -> Perm:
    return Perm.from_cycles([(i, j)], n)


def cycle_type_label(ct: Sequence[int]) -> str:
    """``[2,2]`` style label without fixed points; identity is ``[1]``."""
    nz = [c for c in ct if c > 1]
    return "[" + ",".join(map(str, nz)) + "]" if nz else "[1]"
