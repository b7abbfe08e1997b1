"""Duads, synthemes, synthematic totals and the outer automorphism of S6."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .perm import Perm
from .s6 import tables

Duad = tuple[int, int]
Syntheme = tuple[Duad, Duad, Duad]


@lru_cache(maxsize=1)
def duads() -> tuple[Duad, ...]:
    """The 15 two-element subsets of {1..6}, lexicographically ordered."""
    return tuple(combinations(range(1, 7), 2))


@lru_cache(maxsize=1)
def synthemes() -> tuple[Syntheme, ...]:
    """The 15 splittings of {1..6} into three duads, each sorted, lexicographically ordered."""
    out = set()
    for a in duads():
        rest = [i for i in range(1, 7) if i not in a]
        for b in combinations(rest, 2):
            c = tuple(i for i in rest if i not in b)
            out.add(tuple(sorted([a, b, c])))
    return tuple(sorted(out))


@lru_cache(maxsize=1)
def totals() -> tuple[tuple[Syntheme, ...], ...]:
    """The six synthematic totals: five pairwise disjoint synthemes covering all duads."""
    syn = synthemes()
    disjoint = {
        (s, t): not (set(s) & set(t)) for s in syn for t in syn
    }
    out = []
    for combo in combinations(syn, 5):
        if all(disjoint[a, b] for a, b in combinations(combo, 2)):
            out.append(tuple(sorted(combo)))
    out.sort()
    if len(out) != 6:
        raise AssertionError(f"expected 6 synthematic totals, found {len(out)}")
    return tuple(out)


def act_on_duad(g: Perm, d: Duad) -> Duad:
    return tuple(sorted((g(d[0]), g(d[1]))))  # type: ignore[return-value]


def act_on_syntheme(g: Perm, s: Syntheme) -> Syntheme:
    return tuple(sorted(act_on_duad(g, d) for d in s))  # type: ignore[return-value]


def duad_perm(d: Duad) -> Perm:
    """The transposition w(I) swapping the two points of a duad."""
    return Perm.from_cycles([d])


def syntheme_perm(s: Syntheme) -> Perm:
    """The triple transposition w(Γ) of a syntheme."""
    return Perm.from_cycles(list(s))


class OuterAut:
    """An automorphism of S6 that is not inner, given element-wise.

    ``alpha(g)`` is the permutation induced by ``g`` on the six synthematic
    totals (labelled 1..6 in sorted order).
    """

    def __init__(self):
        t = tables()
        tot = totals()
        label = {T: i + 1 for i, T in enumerate(tot)}
        images: list[int] = []
        for g in t.perms:
            img = [label[tuple(sorted(act_on_syntheme(g, s) for s in T))] for T in tot]
            images.append(t.index[Perm(img)])
        self._img = images
        self.verify()

    def __call__(self, g: Perm) -> Perm:
        t = tables()
        return t.perms[self._img[t.index[g]]]

    def index_map(self) -> list[int]:
        return list(self._img)

    def image_mask(self, mask: int) -> int:
        t = tables()
        m = 0
        for i in t.members(mask):
            m |= 1 << self._img[i]
        return m

    # -- verification -------------------------------------------------------
    def verify(self) -> None:
        t = tables()
        img = self._img
        if len(set(img)) != 720:
            raise AssertionError("outer automorphism is not bijective")
        for a in range(720):
            row, ia = t.mul[a], img[a]
            irow = t.mul[ia]
            for b in range(720):
                if img[row[b]] != irow[img[b]]:
                    raise AssertionError("outer automorphism is not a homomorphism")
        for d in duads():
            if self(duad_perm(d)).cycle_type != (2, 2, 2):
                raise AssertionError("transposition not mapped to a triple transposition")
        if self.is_inner():
            raise AssertionError("constructed automorphism is inner")

    def is_inner(self) -> bool:
        return inner_conjugator(self._img) is not None

    def square_conjugator(self) -> Perm | None:
        """An element x with alpha(alpha(g)) = x g x^-1 for all g, or None."""
        sq = [self._img[self._img[i]] for i in range(720)]
        x = inner_conjugator(sq)
        return None if x is None else tables().perms[x]


def inner_conjugator(images: list[int]) -> int | None:
    """Index of x with images[g] == x g x^-1 for every g (searching all 720 x)."""
    t = tables()
    gens = [t.index[Perm.from_cycles([(1, 2)])], t.index[Perm.from_cycles([(1, 2, 3, 4, 5, 6)])]]
    for x in range(720):
        if all(t.conj(x, g) == images[g] for g in gens):
            if all(t.conj(x, g) == images[g] for g in range(720)):
                return x
    return None


@lru_cache(maxsize=1)
def outer_automorphism() -> OuterAut:
    return OuterAut()


def duad_to_syntheme() -> dict[Duad, Syntheme]:
    """Bijection transported by the outer automorphism: w(I) -> alpha(w(I)) = w(Γ)."""
    alpha = outer_automorphism()
    by_perm = {syntheme_perm(s): s for s in synthemes()}
    return {d: by_perm[alpha(duad_perm(d))] for d in duads()}


def syntheme_to_duad() -> dict[Syntheme, Duad]:
    """Bijection w(Γ) -> alpha(w(Γ)), which is a transposition."""
    alpha = outer_automorphism()
    by_perm = {duad_perm(d): d for d in duads()}
    return {s: by_perm[alpha(syntheme_perm(s))] for s in synthemes()}
