"""Characters coming from explicit geometric models.

* Pic of the quintic del Pezzo surface: the automorphism group S5 acts on
  Z^5 = <l, e1, ..., e4>, generated by the S4 permuting the exceptional
  classes and the quadratic Cremona involution centred at three of the points.
  The S5-labels come from the action on the five conic-bundle classes
  ``l - e_i`` (i = 1..4) and ``2l - e1 - e2 - e3 - e4``.
* Induced characters on A5 attached to special members of the pencil.
"""

from __future__ import annotations

from functools import lru_cache

from ..groups.perm import Perm
from ..groups.subgroup import Subgroup, generate, intersection
from .classfunction import ClassFunction, decompose, induce, invariant_rank, sym_power_character
from .partitions import partitions
from .tables import a5_irreducibles, a5_standard, s_n

Vec = tuple[int, ...]
Mat = tuple[tuple[int, ...], ...]


def _matmul(a: Mat, b: Mat) -> Mat:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def _apply(a: Mat, v: Vec) -> Vec:
    return tuple(sum(a[i][k] * v[k] for k in range(len(v))) for i in range(len(a)))


def _columns_to_matrix(cols: list[Vec]) -> Mat:
    n = len(cols)
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def _perm_matrix(p: Perm) -> Mat:
    """Permute e1..e4 (p acts on {1..4}), fix l."""
    cols = [(1, 0, 0, 0, 0)]
    for i in range(1, 5):
        v = [0] * 5
        v[p(i)] = 1
        cols.append(tuple(v))
    return _columns_to_matrix(cols)


def cremona_matrix() -> Mat:
    """Quadratic transformation centred at the first three points."""
    cols = [
        (2, -1, -1, -1, 0),  # l -> 2l - e1 - e2 - e3
        (1, 0, -1, -1, 0),  # e1 -> l - e2 - e3
        (1, -1, 0, -1, 0),  # e2 -> l - e1 - e3
        (1, -1, -1, 0, 0),  # e3 -> l - e1 - e2
        (0, 0, 0, 0, 1),  # e4 fixed
    ]
    return _columns_to_matrix(cols)


CONIC_CLASSES: tuple[Vec, ...] = (
    (1, -1, 0, 0, 0),
    (1, 0, -1, 0, 0),
    (1, 0, 0, -1, 0),
    (1, 0, 0, 0, -1),
    (2, -1, -1, -1, -1),
)


def intersection_form(a: Vec, b: Vec) -> int:
    return a[0] * b[0] - sum(x * y for x, y in zip(a[1:], b[1:]))


@lru_cache(maxsize=1)
def pic_group() -> dict[Perm, Mat]:
    """The 120 lattice automorphisms, keyed by their permutation of the conic classes."""
    gens = [_perm_matrix(Perm.parse("(1 2)", 4)), _perm_matrix(Perm.parse("(1 2 3 4)", 4)), cremona_matrix()]
    ident = tuple(tuple(int(i == j) for j in range(5)) for i in range(5))
    seen = {ident}
    todo = [ident]
    while todo:
        a = todo.pop()
        for g in gens:
            c = _matmul(g, a)
            if c not in seen:
                seen.add(c)
                todo.append(c)
    index = {v: i + 1 for i, v in enumerate(CONIC_CLASSES)}
    out: dict[Perm, Mat] = {}
    for m in seen:
        perm = Perm([index[_apply(m, v)] for v in CONIC_CLASSES])
        if perm in out:
            raise AssertionError("lattice automorphism group does not act faithfully on conic classes")
        out[perm] = m
    return out


def verify_pic_group() -> dict:
    """Order, homomorphism and isometry checks of the lattice model."""
    grp = pic_group()
    k = (-3, 1, 1, 1, 1)  # canonical class
    basis = [tuple(int(i == j) for j in range(5)) for i in range(5)]
    isometry = all(
        intersection_form(_apply(m, a), _apply(m, b)) == intersection_form(a, b) and _apply(m, k) == k
        for m in grp.values()
        for a in basis
        for b in basis
    )
    perms = list(grp)
    hom = all(_matmul(grp[p], grp[q]) == grp[p * q] for p in perms[:20] for q in perms)
    return {"order": len(grp), "isometries_fixing_K": isometry, "homomorphism": hom}


def pic_character() -> ClassFunction:
    grp = pic_group()
    elems = s_n(5).elements
    return ClassFunction(elems, {g: sum(grp[g][i][i] for i in range(5)) for g in elems}, "Pic(S)")


def pic_decomposition() -> dict[str, int]:
    G = s_n(5)
    table = [ClassFunction.irreducible(lam, G.elements) for lam in partitions(5)]
    return decompose(pic_character(), table)


def cubic_invariants(lam=(3, 2)) -> int:
    """Number of S5-invariant cubic forms on the irreducible representation ``R(lam)``."""
    G = s_n(5)
    chi = ClassFunction.irreducible(lam, G.elements)
    return invariant_rank(sym_power_character(chi, 3), G.elements)


# -- inductions to A5 --------------------------------------------------------------


@lru_cache(maxsize=1)
def a5_subgroups() -> dict[str, Subgroup]:
    """A5 in degree 5 with A3,2 = (S3 x S2) ∩ A5, A4 fixing 5, and A5 itself."""
    a5 = a5_standard()
    s32 = generate([Perm.parse("(1 2)", 5), Perm.parse("(1 2 3)", 5), Perm.parse("(4 5)", 5)], 5)
    return {
        "A3,2": intersection(s32, a5),
        "A4": Subgroup([g for g in a5 if g(5) == 5], None, 5),
        "A5": a5,
    }


def s3_factor_sign(g: Perm) -> int:
    """Sign of the component of ``g`` in Sym{1,2,3} (the sign character of A3,2 ≅ S3)."""
    sub = [g(i) for i in (1, 2, 3)]
    inv = sum(1 for i in range(3) for j in range(i + 1, 3) if sub[i] > sub[j])
    return -1 if inv % 2 else 1


def induced_row(row: str) -> dict[str, int]:
    """Decomposition of the induced character for one parameter row.

    Rows: ``"0"`` -> Ind_{A3,2}(1), ``"±1"`` -> Ind_{A3,2}(sign),
    ``"±1/sqrt(-3)"`` -> Ind_{A4}(1), ``"±3/sqrt(5)"`` -> Ind_{A5}(1).
    """
    subs = a5_subgroups()
    a5 = subs["A5"]
    if row == "0":
        phi = ClassFunction.trivial(subs["A3,2"].elements)
    elif row == "±1":
        H = subs["A3,2"]
        phi = ClassFunction(H.elements, {g: s3_factor_sign(g) for g in H.elements}, "sign")
    elif row == "±1/sqrt(-3)":
        phi = ClassFunction.trivial(subs["A4"].elements)
    elif row == "±3/sqrt(5)":
        phi = ClassFunction.trivial(a5.elements)
    else:
        raise ValueError(f"unknown row {row!r}")
    return decompose(induce(phi, a5.elements), a5_irreducibles(a5))


INDUCTION_ROWS = ("0", "±1", "±1/sqrt(-3)", "±3/sqrt(5)")


def nonstandard_a5_restriction(lam) -> dict[str, int]:
    """Decompose R(lam)|_{bar A5}, identifying bar A5 with A5 through the outer automorphism."""
    from ..groups.outer import outer_automorphism
    from ..groups.subgroup import alternating_group

    alpha = outer_automorphism()
    a5 = alternating_group(6, [1, 2, 3, 4, 5])
    chi = ClassFunction(a5.elements, {g: _mn(lam, alpha(g).cycle_type) for g in a5.elements})
    return decompose(chi, a5_irreducibles(a5))


def _mn(lam, ct):
    from .partitions import mn_character

    return mn_character(tuple(lam), ct)


# extra summand of Cl(X_t) ⊗ Q at the special members, keyed by the parameter row
EXTRA_SUMMAND_BY_ROW = {"±1": (3, 1, 1, 1), "±1/sqrt(-3)": (2, 2, 2), "±3/sqrt(5)": (1, 1, 1, 1, 1, 1)}
