"""Exact verification of polynomial identities attached to the catalog maps.

Equality of projective maps "up to scalar" is always certified by the vanishing
of 2x2 minors of the component matrix; components are never divided.
"""

from __future__ import annotations

import time
from fractions import Fraction
from itertools import combinations

from ..algebra.matrix import ScalarMatrix
from ..algebra.poly import Poly, PolyRing, elementary_symmetric_of, exact_divide, proportionality_factor
from ..algebra.scalars import format_scalar, primitive_cube_root_of_unity
from ..report import CheckReport, report
from ..varieties.catalog import UV_RING, VarietyDef, X_RING, YZ_RING, build, igusa_quartic
from .catalog import (
    RationalMap,
    coble_resolution,
    cubic_involution,
    plane_pair_involution,
    ramification_determinant,
    swap_map,
    toric_projection,
    x0_formula,
    yz_swap,
    yz_to_x,
)


def proportional_components(a, b, modulus: Poly | None = None) -> list[tuple[int, int]]:
    """Index pairs (i, j) whose minor a_i b_j - a_j b_i is nonzero (modulo ``modulus``)."""
    bad = []
    for i, j in combinations(range(len(a)), 2):
        m = a[i] * b[j] - a[j] * b[i]
        if m.is_zero():
            continue
        if modulus is not None and not modulus.is_zero() and exact_divide(m, modulus) is not None:
            continue
        bad.append((i, j))
    return bad


def verify_lands_in(m: RationalMap, target: VarietyDef, name: str | None = None) -> CheckReport:
    """Every defining equation of ``target`` pulls back to the zero polynomial."""
    start = time.perf_counter()
    if tuple(target.ring.names) != tuple(m.target.names):
        raise ValueError(f"map target {m.target.names} differs from variety ambient {target.ring.names}")
    residues = [m.pullback(f) for f in target.equations]
    bad = [str(r) for r in residues if not r.is_zero()]
    return report(
        name or f"{m.name}_lands_in_{target.id}",
        not bad,
        witness=bad,
        details={"equations": len(target.equations)},
        started=start,
    )


def discriminant_form(ring: PolyRing = YZ_RING) -> Poly:
    """(s2(y) - s2(z))^2 - 4 (s1(y) - s1(z)) (s3(y) - s3(z))."""
    ys = [ring.gen(n) for n in ("y1", "y2", "y3")]
    zs = [ring.gen(n) for n in ("z1", "z2", "z3")]
    d = [elementary_symmetric_of(ys, k) - elementary_symmetric_of(zs, k) for k in (1, 2, 3)]
    return d[1] ** 2 - d[0] * d[2] * 4


def _restrict_to_yz_hyperplane(p: Poly) -> Poly:
    g = YZ_RING.gen
    z3 = -(g("y1") + g("y2") + g("y3") + g("z1") + g("z2"))
    return p.substitute({"z3": z3}, YZ_RING)


def verify_igusa_substitution() -> CheckReport:
    """The Igusa quartic pulled back along the yz -> x substitution is a multiple of the discriminant
    form; the x's sum to zero identically."""
    start = time.perf_counter()
    m = yz_to_x()
    pulled = m.pullback(igusa_quartic(X_RING))
    target = discriminant_form()
    sum_zero = sum(m.components, YZ_RING.zero()).is_zero()
    c = proportionality_factor(pulled, target)
    mode = "unrestricted"
    if c is None:
        mode = "on_hyperplane"
        c = proportionality_factor(_restrict_to_yz_hyperplane(pulled), _restrict_to_yz_hyperplane(target))
    ok = sum_zero and c is not None and c != 0
    return report(
        "igusa_substitution",
        ok,
        witness={"sum_zero": sum_zero, "mode": mode, "scalar": c},
        details={"scalar": None if c is None else format_scalar(c), "identity_holds": mode},
        started=start,
    )


def verify_involution(m: RationalMap, modulus: Poly | None = None, name: str | None = None) -> CheckReport:
    """m o m is the identity as a projective map (block by block), modulo ``modulus``."""
    start = time.perf_counter()
    if m.source is not m.target:
        raise ValueError("an involution must map a ring to itself")
    comp = m.compose(m)
    if all(c.is_zero() for c in comp.components):
        raise ArithmeticError(f"{m.name}: the composite is identically zero")
    ident = [m.source.gen(n) for n in m.source.names]
    bad = {}
    zero_blocks = []
    for block in m.block_list:
        a = [comp.components[i] for i in block]
        b = [ident[i] for i in block]
        if all(x.is_zero() for x in a):
            zero_blocks.append(block)
        pairs = proportional_components(a, b, modulus)
        if pairs:
            bad[str(block)] = pairs
    ok = not bad and not zero_blocks
    return report(
        name or f"{m.name}_is_involution",
        ok,
        witness={"non_proportional": bad, "zero_blocks": zero_blocks},
        details={"composite_degree": comp.components[0].total_degree(), "modulus": None if modulus is None else str(modulus)},
        started=start,
    )


def cubic_equation(ring: PolyRing = YZ_RING) -> Poly:
    return build("perazzo").hypersurface.to_ring(ring)


def verify_involution_compatibility() -> CheckReport:
    """toric o (plane involution) agrees with (cubic involution) o toric up to scalar; x0 and the
    ramification determinant are proportional; the determinant equals s2(y) - s2(z) on the toric
    image and changes sign under u <-> v."""
    start = time.perf_counter()
    t = toric_projection()
    left = t.compose(plane_pair_involution())
    right = cubic_involution().compose(t)
    bad = proportional_components(left.components, right.components)
    det = ramification_determinant()
    ys, zs = list(t.components[:3]), list(t.components[3:])
    s2diff = elementary_symmetric_of(ys, 2) - elementary_symmetric_of(zs, 2)
    c_det = proportionality_factor(det, s2diff)
    c_x0 = proportionality_factor(x0_formula(), det)
    swapped = swap_map().pullback(det)
    antisym = (swapped + det).is_zero()
    ok = not bad and c_det is not None and c_x0 is not None and antisym
    return report(
        "involution_compatibility",
        ok,
        witness={"non_proportional_minors": bad, "det_vs_s2": c_det, "x0_vs_det": c_x0, "antisymmetric": antisym},
        details={"det_over_s2_difference": None if c_det is None else format_scalar(c_det),
                 "x0_over_det": None if c_x0 is None else format_scalar(c_x0)},
        started=start,
    )


def verify_determinant_form() -> CheckReport:
    """The ramification determinant and s2(u2v3, u3v1, u1v2) - s2(u3v2, u1v3, u2v1) define the same
    divisor: they agree up to a nonzero scalar, which is recorded (it is -1)."""
    start = time.perf_counter()
    t = toric_projection()
    det = ramification_determinant()
    s2diff = elementary_symmetric_of(list(t.components[:3]), 2) - elementary_symmetric_of(list(t.components[3:]), 2)
    c = proportionality_factor(det, s2diff)
    return report("ramification_determinant_form", c is not None and c != 0, witness={"det": det, "s2_difference": s2diff},
                  details={"scalar": None if c is None else format_scalar(c), "degree": det.total_degree()},
                  started=start)


# ---------------------------------------------------------------------------
# hyperplane pullbacks
# ---------------------------------------------------------------------------

FACTORING_TRIPLES = {
    (1, 2, 4): ("u1 - u3", "v2"),
    (1, 2, 5): ("u1", "v2 - v3"),
    (1, 3, 4): ("u3", "v1 - v2"),
    (1, 3, 6): ("u2 - u3", "v1"),
    (2, 3, 5): ("u1 - u2", "v3"),
    (2, 3, 6): ("u2", "v1 - v3"),
}
# the remaining jail hyperplanes and the point P_r = (P_r, P_r) where the pullback is singular
SINGULAR_TRIPLES = {
    (1, 2, 3): (1, 1, 1),
    (1, 5, 6): (1, 0, 0),
    (2, 4, 6): (0, 1, 0),
    (3, 4, 5): (0, 0, 1),
}


def bilinear_matrix(f: Poly) -> ScalarMatrix:
    """A with f = sum_ij A_ij u_i v_j (f must be bilinear in u, v)."""
    rows = []
    for i in range(3):
        row = []
        for j in range(3):
            e = [0] * 6
            e[i], e[3 + j] = 1, 1
            row.append(f.terms.get(tuple(e), 0))
        rows.append(row)
    return ScalarMatrix(rows)


def hyperplane_pullback(triple) -> Poly:
    m = coble_resolution()
    return sum((m.components[i] for i in triple), UV_RING.zero())


def verify_hyperplane_pullbacks() -> CheckReport:
    """Six jail hyperplanes pull back to products (linear in u) x (linear in v) as listed; the other four
    pull back to irreducible bilinear forms singular at the diagonal point (P_r, P_r)."""
    start = time.perf_counter()
    out, bad = {}, []
    complement = lambda T: tuple(i for i in range(1, 7) if i not in T)  # noqa: E731
    for T, (fu, fv) in FACTORING_TRIPLES.items():
        f = hyperplane_pullback(T)
        expected = UV_RING.parse(fu) * UV_RING.parse(fv)
        c = proportionality_factor(f, expected)
        # H_I = H_{complement of I} on the hyperplane, so the complement must give the same divisor
        c2 = proportionality_factor(hyperplane_pullback(complement(T)), expected)
        out["".join(map(str, T))] = {"factors": f"({fu})*({fv})", "scalar": None if c is None else format_scalar(c)}
        if c is None or c2 is None:
            bad.append(T)
    for T, P in SINGULAR_TRIPLES.items():
        f = hyperplane_pullback(T)
        A = bilinear_matrix(f)
        rank = A.rank()
        sing = all(x == 0 for x in A.apply(list(P))) and all(x == 0 for x in A.transpose().apply(list(P)))
        out["".join(map(str, T))] = {"rank": rank, "singular_at": list(P)}
        if rank < 2 or not sing:
            bad.append(T)
    return report("hyperplane_pullbacks", not bad, witness=bad, details={"triples": out, "count": len(out)},
                  started=start)


# ---------------------------------------------------------------------------
# factorization over Q(sqrt(-3))
# ---------------------------------------------------------------------------


def verify_burkhardt_factorization() -> CheckReport:
    """(q0(u) + q_inf(u))(v1, v2, 0) = 2/3 * L * conj(L) with
    L = u1v2 + w u2v1 + w^2 u3v1 + w u3v2, w a primitive cube root of unity."""
    from ..varieties.verra import form, verra_matrices

    start = time.perf_counter()
    q0, qinf = verra_matrices()
    f = (form(q0) + form(qinf)).substitute({"v3": UV_RING.zero()}, UV_RING)
    g = UV_RING.gen
    w = primitive_cube_root_of_unity()
    w2 = w * w
    L1 = g("u1") * g("v2") + g("u2") * g("v1") * w + g("u3") * g("v1") * w2 + g("u3") * g("v2") * w
    L2 = g("u1") * g("v2") + g("u2") * g("v1") * w2 + g("u3") * g("v1") * w + g("u3") * g("v2") * w2
    diff = f - L1 * L2 * Fraction(2, 3)
    conj = all(c2 == c1.conjugate() if hasattr(c1, "conjugate") else c2 == c1
               for c1, c2 in ((L1.terms[e], L2.terms.get(e)) for e in L1.terms))
    return report("burkhardt_factorization", diff.is_zero() and conj, witness=diff,
                  details={"field": -3, "factors_conjugate": conj}, started=start)


# ---------------------------------------------------------------------------
# named checks
# ---------------------------------------------------------------------------


def rho_lands_in_coble() -> CheckReport:
    return verify_lands_in(coble_resolution(1), build("coble"), "rho42_lands_in_coble")


def rho_flipped_lands_in_coble() -> CheckReport:
    return verify_lands_in(coble_resolution(-1), build("coble"), "rho42_flipped_lands_in_coble")


def toric_lands_in_cubic() -> CheckReport:
    return verify_lands_in(toric_projection(), build("perazzo"), "toric_projection_lands_in_cubic")


def cubic_involution_check() -> CheckReport:
    return verify_involution(cubic_involution(), cubic_equation(), "cubic_involution_is_involution")


def plane_pair_involution_check() -> CheckReport:
    # the cubic pulls back to zero on P^2 x P^2, so the composite must be the identity exactly
    modulus = toric_projection().pullback(cubic_equation())
    return verify_involution(plane_pair_involution(), modulus, "plane_pair_involution_is_involution")


def swap_involution_check() -> CheckReport:
    return verify_involution(yz_swap(), None, "yz_swap_is_involution")


def catalog_content_check(seed: int = 0) -> CheckReport:
    """Each catalog map has homogeneous components of one common degree with no common factor
    (randomized restriction-to-lines test, seeded)."""
    from .catalog import MAPS, has_common_factor

    start = time.perf_counter()
    rows, bad = {}, []
    for name, build_map in MAPS.items():
        m = build_map()
        homog = m.is_homogeneous()
        common = any(has_common_factor([m.components[i] for i in block], seed=seed) for block in m.block_list)
        rows[name] = {"degree": m.degree if homog else None, "homogeneous": homog, "common_factor": common}
        if not homog or common:
            bad.append(name)
    return report("map_catalog_content", not bad, witness=bad, details={"maps": rows, "seed": seed}, started=start)
