"""Explicitly constructed named subgroups of S6 and a class-level classifier.

Every name is attached to a concrete subgroup built from generators; its
conjugacy class is then found by exact lookup in the subgroup catalog.  The
"bar" of a name is the image under the outer automorphism.  Classes without
any constructed name are reported by invariants only.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import lru_cache
from itertools import permutations

from .lattice import subgroup_classes
from .outer import outer_automorphism
from .perm import Perm
from .s6 import tables
from .subgroup import Subgroup, alternating_group, generate, intersection, symmetric_group

P = Perm.parse


def _graph_with_swap(base: Subgroup, kernel: Subgroup) -> Subgroup:
    """Image of ``g -> (g, v(g))`` in S4 x <(5 6)> where ``v`` has the given index-2 kernel."""
    swap = P("(5 6)")
    return Subgroup(g if g in kernel else g * swap for g in base)


def _cyclic_name(g: Perm) -> str:
    ct = g.nontrivial_cycle_type
    if ct == (5,):
        return "mu5"
    return f"mu{g.order}[{','.join(map(str, ct))}]"


@lru_cache(maxsize=1)
def named_subgroups() -> dict[str, Subgroup]:
    """Base names (no bars) with explicit constructions."""
    S = symmetric_group
    A = alternating_group
    s6, a6 = S(6), A(6)
    s5, a5 = S(6, [1, 2, 3, 4, 5]), A(6, [1, 2, 3, 4, 5])
    s4 = S(6, [1, 2, 3, 4])
    a4 = A(6, [1, 2, 3, 4])
    s42 = generate([P("(1 2)"), P("(1 2 3 4)"), P("(5 6)")])
    s33 = generate([P("(1 2)"), P("(1 2 3)"), P("(4 5)"), P("(4 5 6)")])
    s32 = generate([P("(1 2)"), P("(1 2 3)"), P("(4 5)")])
    s3 = S(6, [1, 2, 3])
    d8 = generate([P("(1 3 2 4)"), P("(1 2)")])
    mu4 = generate([P("(1 3 2 4)")])
    v4 = generate([P("(1 2)(3 4)"), P("(1 3)(2 4)")])
    s22 = generate([P("(1 2)"), P("(3 4)")])
    out: dict[str, Subgroup] = {
        "1": generate([]),
        "S6": s6,
        "A6": a6,
        "S5": s5,
        "A5": a5,
        "S4,2": s42,
        "A4,2": intersection(s42, a6),
        "S3,3": s33,
        "S3,2": s32,
        "A3,2": intersection(s32, a6),
        "S4": s4,
        "A4": a4,
        "S3": s3,
        "S3xmu3": generate([P("(1 2)"), P("(1 2 3)"), P("(4 5 6)")]),
        "A4xS2": generate([P("(1 2)(3 4)"), P("(1 2 3)"), P("(5 6)")]),
        "D8xS2": generate([P("(1 3 2 4)"), P("(1 2)"), P("(5 6)")]),
        "mu4xmu2": generate([P("(1 2 3 4)"), P("(5 6)")]),
        "V4xmu2": generate([P("(1 2)(3 4)"), P("(1 3)(2 4)"), P("(5 6)")]),
        "mu2xmu2xmu2": generate([P("(1 2)"), P("(3 4)"), P("(5 6)")]),
        "mu2[2,2]xmu2[2]": generate([P("(1 2)(3 4)"), P("(5 6)")]),
        "mu2[2]xmu2[2]": s22,
        "mu3xmu3": generate([P("(1 2 3)"), P("(4 5 6)")]),
        "D10": generate([P("(1 2 3 4 5)"), P("(2 5)(3 4)")]),
        "D8": d8,
        "D8o": _graph_with_swap(d8, mu4),
        "D8+": _graph_with_swap(d8, v4),
        "D8x": _graph_with_swap(d8, s22),
        "V4": v4,
        "V4,2": generate([P("(1 2)(3 4)"), P("(1 3)(2 4)(5 6)")]),
        "mu5:mu4": intersection(s5, Subgroup(outer_automorphism()(g) for g in s5)),
    }
    for g in ["(1 2 3 4 5 6)", "(1 2 3)(4 5)", "(1 2 3 4)", "(1 2 3 4)(5 6)", "(1 2 3 4 5)",
              "(1 2 3)", "(1 2 3)(4 5 6)", "(1 2)", "(1 2)(3 4)", "(1 2)(3 4)(5 6)", "(1 2 3 4)(5 6)"]:
        p = P(g)
        out.setdefault(_cyclic_name(p), generate([p]))
    return out


# names as written in the invariant-rank tables that differ from the base names above
ALIASES = {"D12": "bar(S3,2)", "D8xmu2": "D8xS2", "mu4[4]": "mu4[4]", "S2,2": "mu2[2]xmu2[2]"}


@lru_cache(maxsize=1)
def name_index() -> dict[str, int]:
    """Map every constructible name (including ``bar(...)``) to its class index."""
    cat = subgroup_classes()
    alpha = outer_automorphism()
    out: dict[str, int] = {}
    for name, H in named_subgroups().items():
        out[name] = cat.classify_mask(H.mask)
        out[f"bar({name})"] = cat.classify_mask(alpha.image_mask(H.mask))
    for alias, target in ALIASES.items():
        if target in out:
            out.setdefault(alias, out[target])
    return out


def resolve(name: str) -> int | None:
    return name_index().get(name)


@lru_cache(maxsize=1)
def class_names() -> dict[int, list[str]]:
    """All names attached to each class (unbarred names first)."""
    names: dict[int, list[str]] = {}
    idx = name_index()
    for name in sorted(idx, key=lambda n: (n.startswith("bar("), n in ALIASES)):
        names.setdefault(idx[name], []).append(name)
    return names


def transitivity_degree(H: Subgroup) -> int:
    """Largest k such that H is transitive on ordered k-tuples of distinct points (0 if intransitive)."""
    n = H.n
    k = 0
    for k_try in range(1, n + 1):
        base = tuple(range(1, k_try + 1))
        reach = {tuple(g(i) for i in base) for g in H}
        if len(reach) != len(list(permutations(range(n), k_try))):
            break
        k = k_try
    return k


@dataclass
class SubgroupLabel:
    class_index: int
    order: int
    abelian: bool
    census: dict[str, int]
    census_signature: str
    in_A6: bool
    orbit_sizes: list[int]
    transitivity_degree: int
    outer_class_index: int
    outer_stable: bool
    standard: bool | None
    name: str
    names: list[str]

    def to_json(self) -> dict:
        return asdict(self)


def classify_subgroup(H: Subgroup) -> SubgroupLabel:
    cat = subgroup_classes()
    alpha = outer_automorphism()
    idx = cat.classify(H)
    oidx = cat.classify_mask(alpha.image_mask(H.mask))
    names = class_names().get(idx, [])
    if names:
        name = names[0]
        standard = None if idx == oidx else not name.startswith("bar(")
    else:
        name = f"unnamed({H.census_signature()})"
        standard = None
    return SubgroupLabel(
        class_index=idx,
        order=H.order,
        abelian=H.is_abelian,
        census=H.census,
        census_signature=H.census_signature(),
        in_A6=H.in_alternating(),
        orbit_sizes=sorted((len(o) for o in H.orbits_on_points()), reverse=True),
        transitivity_degree=transitivity_degree(H),
        outer_class_index=oidx,
        outer_stable=idx == oidx,
        standard=standard,
        name=name,
        names=list(names),
    )


def class_label(index: int) -> SubgroupLabel:
    return classify_subgroup(subgroup_classes().classes[index].subgroup())


def class_from_mask(mask: int) -> int:
    return subgroup_classes().classify_mask(mask)


def element_perm(i: int) -> Perm:
    return tables().perms[i]
