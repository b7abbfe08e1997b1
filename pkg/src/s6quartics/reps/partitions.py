"""Integer partitions and the Murnaghan–Nakayama rule."""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Sequence

Partition = tuple[int, ...]


def is_partition(lam: Sequence[int]) -> bool:
    return all(x > 0 for x in lam) and all(a >= b for a, b in zip(lam, lam[1:]))


def as_partition(lam: Sequence[int]) -> Partition:
    lam = tuple(int(x) for x in lam if x != 0)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam}")
    return lam


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order ((n) first)."""
    out: list[Partition] = []

    def rec(rest: int, cap: int, prefix: tuple[int, ...]):
        if rest == 0:
            out.append(prefix)
            return
        for k in range(min(rest, cap), 0, -1):
            rec(rest - k, k, prefix + (k,))

    rec(n, n, ())
    return tuple(out)


def transpose(lam: Sequence[int]) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > i) for i in range(lam[0]))


def label(lam: Sequence[int]) -> str:
    """``R(3,1,1)`` style label."""
    return "R(" + ",".join(map(str, lam)) + ")"


def parse_label(text: str) -> Partition:
    text = text.strip()
    if text.startswith("R(") and text.endswith(")"):
        text = text[2:-1]
    return as_partition(int(x) for x in text.replace(" ", "").split(",") if x)


def centralizer_order(mu: Sequence[int]) -> int:
    """Order of the centralizer of an element of cycle type ``mu``."""
    out = 1
    for k in set(mu):
        m = list(mu).count(k)
        out *= k**m * factorial(m)
    return out


def class_size(mu: Sequence[int]) -> int:
    return factorial(sum(mu)) // centralizer_order(mu)


def _remove_border_strips(lam: Partition, k: int):
    """Yield (smaller partition, height) for every border strip of size k removable from lam."""
    # beta-numbers (first-column hook lengths) make strip removal a shift by k
    n = len(lam)
    beta = [lam[i] + (n - 1 - i) for i in range(n)]
    bset = set(beta)
    for b in beta:
        if b - k >= 0 and (b - k) not in bset:
            height = sum(1 for c in beta if b - k < c < b)
            new = sorted((c if c != b else b - k) for c in beta)[::-1]
            m = len(new)
            mu = tuple(new[i] - (m - 1 - i) for i in range(m))
            yield tuple(x for x in mu if x > 0), height


@lru_cache(maxsize=None)
def mn_character(lam: Partition, mu: Partition) -> int:
    """Value of the irreducible character of S_n labelled ``lam`` at cycle type ``mu``."""
    lam = as_partition(lam)
    mu = tuple(x for x in mu if x > 0)
    if sum(lam) != sum(mu):
        raise ValueError(f"weight mismatch: |{lam}| != |{mu}|")
    if not mu:
        return 1
    k, rest = mu[0], tuple(sorted(mu[1:], reverse=True))
    total = 0
    for smaller, height in _remove_border_strips(lam, k):
        total += (-1) ** height * mn_character(smaller, rest)
    return total


def character_table(n: int) -> dict[Partition, dict[Partition, int]]:
    """``table[lam][mu]`` for all partitions of ``n``."""
    ps = partitions(n)
    return {lam: {mu: mn_character(lam, mu) for mu in ps} for lam in ps}
