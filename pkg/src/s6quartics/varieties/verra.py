"""The Verra threefolds q0(u)(v) + tau*q_inf(u)(v) = 0 in P2 x P2 and their conic fibres."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from ..algebra.matrix import PolyMatrix, ScalarMatrix, determinant
from ..algebra.poly import Poly, PolyRing
from ..algebra.scalars import Scalar, divide, field_of, format_scalar, sqrt_in_field
from ..report import CheckReport, report
from .catalog import U_RING, UV_RING, W_RING, wiman_edge_sextics

HALF = Fraction(1, 2)
SIXTH = Fraction(1, 6)


@lru_cache(maxsize=None)
def verra_matrices(ring: PolyRing = U_RING) -> tuple[PolyMatrix, PolyMatrix]:
    """The symmetric matrices (q0(u), q_inf(u)) with quadratic entries in u1, u2, u3."""
    u1, u2, u3 = ring.gen("u1"), ring.gen("u2"), ring.gen("u3")
    z = ring.zero()
    a, b, c = u3 * (u2 - u1), u2 * (u1 - u3), u1 * (u3 - u2)
    q0 = PolyMatrix([[z, a, b], [a, z, c], [b, c, z]], ring).scale(HALF)
    d1 = (u2**2 - u2 * u3 + u3**2) * 4
    d2 = (u1**2 - u1 * u3 + u3**2) * 4
    d3 = (u1**2 - u1 * u2 + u2**2) * 4
    e12 = u3 * (u1 + u2) - u1 * u2 * 2 - u3**2 * 2
    e13 = u2 * (u1 + u3) - u1 * u3 * 2 - u2**2 * 2
    e23 = u1 * (u2 + u3) - u2 * u3 * 2 - u1**2 * 2
    qinf = PolyMatrix([[d1, e12, e13], [e12, d2, e23], [e13, e23, d3]], ring).scale(SIXTH)
    return q0, qinf


def _uv_ring(symbolic_tau: bool) -> PolyRing:
    return UV_RING.extend(["tau"]) if symbolic_tau else UV_RING


def form(matrix: PolyMatrix, ring: PolyRing = UV_RING) -> Poly:
    """The bihomogeneous form v^T M(u) v in the (u, v) ring."""
    m = matrix.map(lambda p: p.to_ring(ring), ring)
    v = [ring.gen(n) for n in ("v1", "v2", "v3")]
    return m.quadratic_form(v)


def verra_form(tau: Scalar | None) -> Poly:
    """q0(u)(v) + tau*q_inf(u)(v); ``tau=None`` keeps tau symbolic."""
    ring = _uv_ring(tau is None)
    q0, qinf = verra_matrices()
    t = ring.gen("tau") if tau is None else tau
    return form(q0, ring) + form(qinf, ring) * t


def pencil_matrix(tau: Scalar, u: Sequence[Scalar]) -> ScalarMatrix:
    """q0(u) + tau*q_inf(u) evaluated at a point u."""
    q0, qinf = verra_matrices()
    return q0.evaluate(u) + qinf.evaluate(u) * tau


# ---------------------------------------------------------------------------
# conic fibres
# ---------------------------------------------------------------------------


class ConicFactorizationError(ArithmeticError):
    pass


def _quad(M: ScalarMatrix, v: Sequence[Scalar]) -> Scalar:
    return sum((v[i] * M[i, j] * v[j] for i in range(3) for j in range(3)), 0)


def _proportional(a: Sequence[Scalar], b: Sequence[Scalar]) -> bool:
    """Nonzero vectors equal up to a scalar, certified by all 2x2 minors vanishing."""
    return all(a[i] * b[j] - a[j] * b[i] == 0 for i in range(len(a)) for j in range(i + 1, len(a)))


@dataclass
class ConicFiber:
    tau: Scalar
    u: tuple
    matrix: ScalarMatrix
    rank: int
    factors: tuple[list[Scalar], list[Scalar]] | None = None
    scalar: Scalar | None = None  # v^T M v == scalar * (f1.v) * (f2.v)
    field: int | None = None  # radicand of the field of the factors (None: rational)
    vertex: list[Scalar] | None = None  # intersection point of the two lines

    @property
    def corank(self) -> int:
        return 3 - self.rank

    def to_json(self) -> dict:
        fmt = lambda v: [format_scalar(x) for x in v]  # noqa: E731
        out = {
            "tau": format_scalar(self.tau),
            "u": fmt(self.u),
            "matrix": self.matrix.to_json(),
            "rank": self.rank,
        }
        if self.factors is not None:
            out["factors"] = [fmt(f) for f in self.factors]
            out["scalar"] = format_scalar(self.scalar)
            out["field"] = self.field
            out["vertex"] = fmt(self.vertex)
        return out


def factor_rank2(M: ScalarMatrix) -> tuple[list[Scalar], list[Scalar], Scalar, int | None]:
    """Split a rank-2 symmetric form into two linear factors.

    Returns ``(f1, f2, c, d)`` with ``v^T M v = c (f1.v)(f2.v)`` and ``d`` the
    radicand of the quadratic field needed (``None`` when rational).
    """
    n = 3
    candidates = [[1 if k == i else 0 for k in range(n)] for i in range(n)]
    candidates += [[1 if k in (i, j) else 0 for k in range(n)] for i in range(n) for j in range(i + 1, n)]
    e = next((v for v in candidates if _quad(M, v) != 0), None)
    if e is None:
        raise ConicFactorizationError("zero quadratic form")
    a = _quad(M, e)
    L = M.apply(e)
    # M' = M - L L^T / a has rank 1
    Mp = [[M[i, j] - divide(L[i] * L[j], a) for j in range(n)] for i in range(n)]
    j = next((k for k in range(n) if Mp[k][k] != 0), None)
    if j is None:
        if any(x != 0 for row in Mp for x in row):
            raise ConicFactorizationError("matrix is not of rank 2")
        raise ConicFactorizationError("form has rank 1 (a double line)")
    ell = list(Mp[j])
    # Q = L^2/a + ell^2/Mp[j][j] = (1/a)(L + r ell)(L - r ell) with r^2 = -a/Mp[j][j]
    r2 = divide(-a, Mp[j][j])
    d_ctx = next((field_of(x) for row in M.entries for x in row if field_of(x) is not None), None)
    r = sqrt_in_field(r2, d_ctx)
    if r is None:
        raise ConicFactorizationError(f"factors need sqrt({format_scalar(r2)}) outside the coefficient field")
    f1 = [L[i] + r * ell[i] for i in range(n)]
    f2 = [L[i] - r * ell[i] for i in range(n)]
    c = divide(1, a)
    # certify: c * (f1 f2^T + f2 f1^T)/2 == M
    for i in range(n):
        for k in range(n):
            if c * (f1[i] * f2[k] + f2[i] * f1[k]) * HALF != M[i, k]:
                raise ConicFactorizationError("factorization certificate failed")
    return f1, f2, c, field_of(r) if field_of(r) is not None else d_ctx


def conic_fiber(tau: Scalar, u: Sequence[Scalar]) -> ConicFiber:
    """The conic {v : (q0(u) + tau q_inf(u))(v) = 0} over the point u."""
    M = pencil_matrix(tau, u)
    rank = M.rank()
    fib = ConicFiber(tau=tau, u=tuple(u), matrix=M, rank=rank)
    if rank == 2:
        f1, f2, c, d = factor_rank2(M)
        fib.factors, fib.scalar, fib.field = (f1, f2), c, d
        fib.vertex = M.kernel()[0]
    return fib


def component_action(g: ScalarMatrix, fiber: ConicFiber) -> str:
    """``"fixes"`` or ``"swaps"``: how v -> g v permutes the two lines of a rank-2 conic."""
    if fiber.factors is None:
        raise ValueError("component action needs a conic of rank 2")
    M = fiber.matrix
    pulled = g.transpose() * M * g
    if not _proportional([x for row in pulled.entries for x in row], [x for row in M.entries for x in row]):
        raise ValueError("the automorphism does not preserve the conic")
    gt = g.transpose()
    f1, f2 = fiber.factors
    h1 = gt.apply(f1)
    if _proportional(h1, f1):
        return "fixes"
    if _proportional(h1, f2):
        return "swaps"
    raise AssertionError("image of a component is neither component")


# ---------------------------------------------------------------------------
# plane automorphisms permuting the four points (1:1:1), (1:0:0), (0:1:0), (0:0:1)
# ---------------------------------------------------------------------------

PLANE_POINTS = ((1, 1, 1), (1, 0, 0), (0, 1, 0), (0, 0, 1))
_RELATION = (1, -1, -1, -1)  # P0 - P1 - P2 - P3 = 0


def plane_automorphism(sigma: Sequence[int]) -> ScalarMatrix:
    """The linear map sending P_i to a multiple of P_{sigma(i)} (sigma permutes 0..3)."""
    c = _RELATION
    cols = []
    for j in (1, 2, 3):
        lam = divide(-c[sigma[j]], c[sigma[0]])
        cols.append([lam * x for x in PLANE_POINTS[sigma[j]]])
    return ScalarMatrix([[cols[j][i] for j in range(3)] for i in range(3)])


def plane_s4() -> list[tuple[tuple[int, ...], ScalarMatrix]]:
    return [(s, plane_automorphism(s)) for s in permutations(range(4))]


def perm_sign(sigma: Sequence[int]) -> int:
    sign, seen = 1, set()
    for i in range(len(sigma)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = sigma[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# ---------------------------------------------------------------------------
# discriminant identity
# ---------------------------------------------------------------------------

UT_RING = PolyRing(("u1", "u2", "u3", "tau"))
WT_RING = PolyRing(("w1", "w2", "w3", "tau"))


def discriminant_polynomial() -> Poly:
    """det(q0(u) + tau q_inf(u)) as a polynomial in u1, u2, u3, tau."""
    q0, qinf = verra_matrices()
    tau = UT_RING.gen("tau")
    a = q0.map(lambda p: p.to_ring(UT_RING), UT_RING)
    b = qinf.map(lambda p: p.to_ring(UT_RING), UT_RING).scale(tau)
    return determinant(a + b)


def u_in_terms_of_w(ring: PolyRing = WT_RING) -> dict[str, Poly]:
    w1, w2, w3 = ring.gen("w1"), ring.gen("w2"), ring.gen("w3")
    return {"u1": w2 + w3, "u2": w1 + w3, "u3": w1 + w2, "tau": ring.gen("tau")}


def discriminant_identity_check() -> CheckReport:
    """12 det(q0 + tau q_inf) == (5 tau^2 + 3) P0 + (tau^3 - tau) P_inf after u = (w2+w3, w1+w3, w1+w2)."""
    start = time.perf_counter()
    lhs = discriminant_polynomial().substitute(u_in_terms_of_w(), WT_RING) * 12
    p0, pinf = (p.to_ring(WT_RING) for p in wiman_edge_sextics(W_RING))
    tau = WT_RING.gen("tau")
    rhs = p0 * (tau**2 * 5 + 3) + pinf * (tau**3 - tau)
    diff = lhs - rhs
    return report(
        "verra_discriminant_identity",
        diff.is_zero(),
        witness=diff,
        details={"terms_lhs": len(lhs.terms), "degree_in_w": 6},
        started=start,
    )
