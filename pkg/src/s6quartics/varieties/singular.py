"""Singular points and nodes of hypersurfaces in the hyperplane sum x = 0.

A point ``p`` of the quartic ``F = 0`` inside ``H = {x1 + ... + x6 = 0}`` is
singular iff ``F(p) = 0`` and the gradient of ``F`` at ``p`` is proportional to
the gradient of ``H``, i.e. all its coordinates are equal.  It is a node iff
the Hessian of ``F`` restricted to ``H`` has rank 4 (the maximum possible, as
``p`` itself is always in the kernel by Euler's identity).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from ..algebra.matrix import ScalarMatrix, univariate_gcd
from ..algebra.poly import Poly, PolyRing
from ..algebra.scalars import Scalar, divide
from .catalog import X_NAMES, VarietyDef, build, pencil_quartic
from .orbits import ORBIT_NAMES, orbit_catalog


class NotOnHyperplaneError(ValueError):
    pass


class NotSingularError(ValueError):
    pass


def _quartic_of(X: VarietyDef | Poly) -> Poly:
    F = X.hypersurface if isinstance(X, VarietyDef) else X
    if F.ring.names[:6] != X_NAMES:
        raise ValueError("expected a hypersurface in the coordinates x1..x6")
    return F


def _check_on_hyperplane(p: Sequence[Scalar]) -> None:
    if len(p) != 6:
        raise NotOnHyperplaneError(f"expected 6 coordinates, got {len(p)}")
    if sum(p, 0) != 0:
        raise NotOnHyperplaneError(f"point {tuple(p)} does not lie on sum x = 0")


def _point_values(F: Poly, p: Sequence[Scalar]) -> dict:
    return dict(zip(F.ring.names, p))


@lru_cache(maxsize=64)
def _derivatives(F: Poly) -> tuple[tuple[Poly, ...], tuple[tuple[Poly, ...], ...]]:
    grad = tuple(F.diff(n) for n in X_NAMES)
    hess = tuple(tuple(g.diff(n) for n in X_NAMES) for g in grad)
    return grad, hess


def gradient_at(X: VarietyDef | Poly, p: Sequence[Scalar]) -> list[Scalar]:
    F = _quartic_of(X)
    grad, _ = _derivatives(F)
    return [g.evaluate(p) for g in grad]


def is_singular_at(X: VarietyDef | Poly, p: Sequence[Scalar]) -> bool:
    """Exact singularity test for a point of the hyperplane (no division involved)."""
    _check_on_hyperplane(p)
    F = _quartic_of(X)
    if F.evaluate(p) != 0:
        return False
    g = gradient_at(F, p)
    return all(g[i] == g[0] for i in range(1, 6))


def _hyperplane_basis() -> list[list[int]]:
    """Columns e_i - e_6 (i = 1..5) spanning the hyperplane sum x = 0."""
    return [[1 if r == i else (-1 if r == 5 else 0) for r in range(6)] for i in range(5)]


def restricted_hessian(X: VarietyDef | Poly, p: Sequence[Scalar]) -> ScalarMatrix:
    """The 5x5 matrix B^T H(p) B, with B a basis of the hyperplane."""
    F = _quartic_of(X)
    _, hess = _derivatives(F)
    H = [[h.evaluate(p) for h in row] for row in hess]
    B = _hyperplane_basis()
    out = []
    for a in B:
        row = []
        for b in B:
            acc = 0
            for i in range(6):
                if a[i] == 0:
                    continue
                for j in range(6):
                    if b[j]:
                        acc = acc + a[i] * H[i][j] * b[j]
            row.append(acc)
        out.append(row)
    return ScalarMatrix(out)


def local_hessian_rank(X: VarietyDef | Poly, p: Sequence[Scalar]) -> int:
    """Rank of the quadratic tangent cone at ``p`` on a transversal slice (at most 4)."""
    return restricted_hessian(X, p).rank()


def is_node_at(X: VarietyDef | Poly, p: Sequence[Scalar]) -> bool:
    """True iff the singular point ``p`` is an ordinary double point."""
    if not is_singular_at(X, p):
        raise NotSingularError(f"point {tuple(p)} is not a singular point")
    return local_hessian_rank(X, p) == 4


# ---------------------------------------------------------------------------
# orbit table
# ---------------------------------------------------------------------------


def singular_orbit_table(t: Scalar) -> dict[str, dict]:
    """For each catalog orbit: how many of its points are singular / nodes on X_t."""
    X = build("X_t", t=t)
    cat = orbit_catalog()
    out = {}
    for name in ORBIT_NAMES:
        pts = cat.orbits[name]
        sing = [p for p in pts if is_singular_at(X, p)]
        nodes = [p for p in sing if local_hessian_rank(X, p) == 4]
        out[name] = {"points": len(pts), "singular": len(sing), "nodes": len(nodes)}
    return out


def singular_orbits(t: Scalar) -> list[str]:
    """Orbits all of whose points are singular on X_t (raises if an orbit is split)."""
    table = singular_orbit_table(t)
    out = []
    for name, row in table.items():
        if row["singular"] not in (0, row["points"]):
            raise AssertionError(f"orbit {name} is only partially singular on X_t")
        if row["singular"]:
            out.append(name)
    return out


def singularity_condition_in_t(p: Sequence[Scalar]) -> dict:
    """Solve the singularity conditions at ``p`` for the pencil parameter ``t``.

    Returns ``{"always": bool, "condition": gcd polynomial in t, "roots": [...]}``:
    the point is singular on X_t exactly for the roots of the condition (or for
    every ``t`` when ``always``).
    """
    _check_on_hyperplane(p)
    F = pencil_quartic(None)
    ring: PolyRing = F.ring
    vals = _point_values(F, p)
    conds = [F.partial_evaluate(vals)]
    grad = [F.diff(n).partial_evaluate(vals) for n in X_NAMES]
    conds += [g - grad[0] for g in grad[1:]]
    conds = [c for c in conds if not c.is_zero()]
    if not conds:
        return {"always": True, "condition": ring.zero(), "roots": []}
    g = conds[0]
    for c in conds[1:]:
        g = univariate_gcd(g, c, "t")
    g = g.monic()
    roots: list[Scalar] = []
    if g.degree("t") == 1:
        c = g.coeffs_in("t")
        c0 = c[0].constant_value() if 0 in c else 0
        roots.append(divide(-c0, c[1].constant_value()))
    return {"always": False, "condition": g, "roots": roots}
