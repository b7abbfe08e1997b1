"""Conjugacy classes of subgroups of S6.

Main algorithm: cyclic extension.  Starting from the cyclic subgroups, every
class representative ``V`` is extended by elements ``g`` of its normalizer with
``g^p in V`` for a prime ``p``; this reaches every solvable subgroup.  The
non-solvable subgroups of S6 all contain a perfect subgroup (A5 or A6) with
solvable quotient, so the perfect subgroups are seeded separately (they are
2-generated by a fixed involution of type [2,2] and one more even element) and
then fed through the same extension loop.

Conjugacy is decided by exact lookup: when a class is registered, all of its
conjugates (as bitmasks) are recorded, so identifying a new candidate is a
single dictionary access.

An independent brute-force enumerator for small orders is provided as an
oracle (:func:`brute_force_classes`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .perm import Perm, cycle_type_label
from .s6 import S6Tables, tables
from .subgroup import Subgroup, closure

_PRIMES = (2, 3, 5)  # primes dividing 720


@dataclass
class SubgroupClass:
    """One conjugacy class of subgroups of S6."""

    index: int
    rep_mask: int
    order: int
    size: int  # number of conjugate subgroups
    normalizer_order: int
    census: dict[str, int] = field(repr=False)

    def subgroup(self) -> Subgroup:
        return Subgroup(tables().to_perms(self.rep_mask))

    def census_signature(self) -> str:
        return " ".join(f"{k}x{v}" for k, v in self.census.items())


def _census(t: S6Tables, members: list[int]) -> dict[str, int]:
    out: dict[str, int] = {}
    for h in members:
        k = cycle_type_label(t.cycle_type[h])
        out[k] = out.get(k, 0) + 1
    return dict(sorted(out.items(), key=lambda kv: (len(kv[0]), kv[0])))


class SubgroupLattice:
    """Registry of conjugacy classes of subgroups of S6."""

    def __init__(self):
        self.t = tables()
        self.class_of: dict[int, int] = {}  # any subgroup mask -> class index
        self._reps: list[int] = []
        self._conjugators: list[dict[int, list[int]]] = []
        self.stats = {"candidates": 0}

    # -- registry -----------------------------------------------------------
    def lookup(self, mask: int) -> int | None:
        return self.class_of.get(mask)

    def register(self, mask: int) -> tuple[int, bool]:
        """Return (class index, is_new)."""
        self.stats["candidates"] += 1
        idx = self.class_of.get(mask)
        if idx is not None:
            return idx, False
        t = self.t
        members = t.members(mask)
        idx = len(self._reps)
        conj: dict[int, list[int]] = {}
        for x in range(720):
            m = t.conjugate_mask(mask, x, members)
            conj.setdefault(m, []).append(x)
        for m in conj:
            self.class_of[m] = idx
        self._reps.append(mask)
        self._conjugators.append(conj)
        return idx, True

    def normalizer(self, idx: int) -> list[int]:
        return self._conjugators[idx][self._reps[idx]]

    # -- enumeration --------------------------------------------------------
    def run(self) -> None:
        t = self.t
        queue: list[int] = []
        for g in range(720):
            idx, new = self.register(t.closure([g]))
            if new:
                queue.append(idx)
        for mask in self.perfect_subgroups():
            idx, new = self.register(mask)
            if new:
                queue.append(idx)
        while queue:
            idx = queue.pop(0)
            for mask in self._cyclic_extensions(idx):
                j, new = self.register(mask)
                if new:
                    queue.append(j)

    def _cyclic_extensions(self, idx: int):
        t = self.t
        vmask = self._reps[idx]
        vmembers = t.members(vmask)
        seen_cosets = vmask
        for g in self.normalizer(idx):
            if seen_cosets >> g & 1:
                continue
            coset = 0
            for v in vmembers:
                coset |= 1 << t.mul[v][g]
            seen_cosets |= coset
            # smallest k with g^k in V; extension is cyclic of prime index iff k is prime
            k, x = 1, g
            while not vmask >> x & 1:
                x = t.mul[x][g]
                k += 1
            if k not in _PRIMES:
                continue
            # <V, g> = V <g> since g normalizes V
            mask = vmask
            power = g
            for _ in range(1, k):
                for v in vmembers:
                    mask |= 1 << t.mul[v][power]
                power = t.mul[power][g]
            yield mask

    def perfect_subgroups(self) -> list[int]:
        """Nontrivial perfect subgroups of S6 containing the involution (1 2)(3 4)."""
        t = self.t
        a = t.index[Perm.from_cycles([(1, 2), (3, 4)])]
        found: dict[int, None] = {}
        for b in range(720):
            if t.sign[b] != 1:
                continue
            mask = t.closure([a, b])
            if mask in found:
                continue
            sub = t.members(mask)
            if len(sub) < 60:
                continue  # perfect subgroups of S6 have order 60 or 360
            found[mask] = None
        out = []
        for mask in found:
            if _is_perfect(t, mask):
                out.append(mask)
        return out

    # -- results ------------------------------------------------------------
    def classes(self) -> list[SubgroupClass]:
        t = self.t
        out = []
        for idx, mask in enumerate(self._reps):
            members = t.members(mask)
            out.append(
                SubgroupClass(
                    index=idx,
                    rep_mask=mask,
                    order=len(members),
                    size=len(self._conjugators[idx]),
                    normalizer_order=len(self.normalizer(idx)),
                    census=_census(t, members),
                )
            )
        return out


def _is_perfect(t: S6Tables, mask: int) -> bool:
    members = t.members(mask)
    comms = set()
    for a in members:
        for b in members[:64]:
            comms.add(t.mul[t.mul[a][b]][t.mul[t.inv[a]][t.inv[b]]])
    return t.closure(list(comms)) == mask


def _sort_key(c: SubgroupClass):
    t = tables()
    elems = tuple(t.perms[i].images for i in t.members(c.rep_mask))
    return (-c.order, tuple(sorted(c.census.items())), elems)


@dataclass(frozen=True)
class ClassCatalog:
    """Deterministically ordered conjugacy classes plus a mask -> class lookup."""

    classes: tuple[SubgroupClass, ...]
    class_of: dict

    def classify_mask(self, mask: int) -> int:
        return self.class_of[mask]

    def classify(self, H: Subgroup) -> int:
        return self.class_of[H.mask]


@lru_cache(maxsize=1)
def subgroup_classes() -> ClassCatalog:
    """All conjugacy classes of subgroups of S6, ordered by (order desc, census, elements)."""
    lat = SubgroupLattice()
    lat.run()
    raw = lat.classes()
    ordered = sorted(raw, key=_sort_key)
    renumber = {c.index: i for i, c in enumerate(ordered)}
    classes = tuple(
        SubgroupClass(
            index=i,
            rep_mask=c.rep_mask,
            order=c.order,
            size=c.size,
            normalizer_order=c.normalizer_order,
            census=c.census,
        )
        for i, c in enumerate(ordered)
    )
    class_of = {m: renumber[i] for m, i in lat.class_of.items()}
    return ClassCatalog(classes, class_of)


def subgroups_up_to_conjugacy(G: Subgroup) -> list[Subgroup]:
    """Representatives of the conjugacy classes of subgroups of ``G`` (only ``G = S6``)."""
    if G.n != 6 or G.order != 720:
        raise ValueError("only the full symmetric group S6 is supported as ambient group")
    return [c.subgroup() for c in subgroup_classes().classes]


# ---------------------------------------------------------------------------
# brute-force oracle (independent code path: Perm objects, explicit conjugator search)
# ---------------------------------------------------------------------------


def _conjugate_set(H: frozenset[Perm], x: Perm) -> frozenset[Perm]:
    xi = x.inverse()
    return frozenset(x * h * xi for h in H)


def _are_conjugate(A: frozenset[Perm], B: frozenset[Perm], ambient: list[Perm]) -> bool:
    if len(A) != len(B):
        return False
    Al = list(A)
    for x in ambient:
        xi = x.inverse()
        if all((x * h * xi) in B for h in Al):
            return True
    return False


def _invariant(H: frozenset[Perm]) -> tuple:
    c: dict[tuple, int] = {}
    for h in H:
        c[h.cycle_type] = c.get(h.cycle_type, 0) + 1
    return (len(H), tuple(sorted(c.items())))


def brute_force_classes(max_order: int = 24) -> dict[int, int]:
    """Number of conjugacy classes of subgroups of S6 per order, for orders <= max_order.

    Every subgroup of order ``m`` has a maximal subgroup ``K`` with ``|K| <= m/2``
    and equals ``<K, g>`` for any ``g`` outside ``K``; so extending class
    representatives of order ``<= max_order/2`` by every element of S6 reaches
    all classes up to ``max_order``.
    """
    from itertools import permutations

    ambient = [Perm(p) for p in permutations(range(1, 7))]
    reps: dict[tuple, list[frozenset[Perm]]] = {}
    seen: set[frozenset[Perm]] = set()
    frontier: list[frozenset[Perm]] = []

    def consider(H: frozenset[Perm]) -> None:
        if H in seen:
            return
        seen.add(H)
        key = _invariant(H)
        bucket = reps.setdefault(key, [])
        for R in bucket:
            if _are_conjugate(H, R, ambient):
                return
        bucket.append(H)
        frontier.append(H)

    e = Perm.identity(6)
    consider(frozenset([e]))
    for g in ambient:
        consider(_small_closure([g], max_order))
    while frontier:
        K = frontier.pop()
        if 2 * len(K) > max_order:
            continue
        gens = list(K)
        for g in ambient:
            if g in K:
                continue
            H = _small_closure(gens + [g], max_order)
            if H is not None:
                consider(H)
    counts: dict[int, int] = {}
    for key, bucket in reps.items():
        counts[key[0]] = counts.get(key[0], 0) + len(bucket)
    return dict(sorted(counts.items()))


def _small_closure(gens: list[Perm], limit: int) -> frozenset[Perm] | None:
    e = Perm.identity(6)
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
                if len(elems) > limit:
                    return None
    return frozenset(seen)
