"""Singular members of the Wiman--Edge pencil P0 + s P_inf by exact elimination.

Both sextics only involve even powers of w1, w2, w3, so ``F_s(w) = G_s(a, b, c)``
with ``a = w1^2, b = w2^2, c = w3^2`` and ``G_s`` a plane cubic.  Since
``dF/dw_i = 2 w_i dG/da_i``, a point ``w`` is singular on ``F_s = 0`` iff for each
``i`` either ``w_i = 0`` or ``dG/da_i = 0`` (``G = 0`` then follows from Euler's
identity).  This splits the singular-point search into cases by the set of
vanishing coordinates, each of which is eliminated with iterated resultants:

* no coordinate zero (chart c = 1): all three partials of ``G`` vanish.  The
  four base points all map to ``(1, 1, 1)``, a common zero for every ``s``;
  its factor ``(a - 1)`` is stripped and the line ``a = 1`` is treated as a
  separate case so no solution is lost;
* exactly one coordinate zero: the two remaining partials vanish;
* two coordinates zero (a vertex): one partial vanishes;
* the base points themselves: the curve on the blown-up surface acquires a
  singularity over a base point only if the tangent cone there degenerates.

Every genuine singular parameter is a root of the product of the case
conditions; conversely each irreducible factor is certified genuine by
back-substitution: an explicit singular point of ``F_s`` (not a base point) is
constructed exactly over the field of a root.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from ..algebra.matrix import resultant, univariate_gcd
from ..algebra.poly import Poly, PolyRing, exact_divide
from ..algebra.scalars import QuadraticNumber, Scalar, divide, field_of, format_scalar, sqrt_in_field
from ..report import CheckReport, report
from .catalog import W_RING, WIMAN_EDGE_BASE_POINTS, wiman_edge_member, wiman_edge_sextics

ABCS = PolyRing(("a", "b", "c", "s"))
S_RING = PolyRing(("s",))


def _cubic_pencil(reverse: bool = False) -> Poly:
    """G_s(a, b, c) with F_s(w) = G_s(w1^2, w2^2, w3^2); ``reverse`` swaps the roles of P0 and P_inf."""
    a, b, c, s = (ABCS.gen(n) for n in ("a", "b", "c", "s"))
    p0 = (b - c) * (c - a) * (a - b)
    pinf = a**3 + b**3 + c**3 + (a + b + c) * (a**2 + b**2 + c**2) - a * b * c * 12
    return pinf + p0 * s if reverse else p0 + pinf * s


def _to_s(p: Poly) -> Poly:
    if any(p.degree(n) > 0 for n in ("a", "b", "c")):
        raise ValueError("expected a polynomial in s only")
    return p.to_ring(S_RING)


def _strip(p: Poly, factor: Poly) -> Poly:
    """Divide out every power of ``factor``."""
    while not p.is_zero():
        q = exact_divide(p, factor)
        if q is None:
            break
        p = q
    return p


def _gcd_all(polys: list[Poly]) -> Poly:
    """gcd of univariate polynomials in s (zero polynomials impose nothing)."""
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return S_RING.zero()
    g = polys[0]
    for p in polys[1:]:
        g = univariate_gcd(g, p, "s")
    return g.monic()


def _common_roots_condition(polys: list[Poly], var: str) -> Poly:
    """Condition on s for the polynomials (in ``var`` and s) to share a root in ``var``."""
    polys = [p for p in polys if not p.is_zero()]
    if any(p.degree(var) == 0 and p.degree("s") <= 0 and not p.is_zero() for p in polys):
        return S_RING.one()  # a nonzero constant: no common root
    conds = []
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            p, q = polys[i], polys[j]
            if p.degree(var) == 0:
                conds.append(_to_s(p))
            elif q.degree(var) == 0:
                conds.append(_to_s(q))
            else:
                conds.append(_to_s(resultant(p, q, var)))
    if len(polys) == 1:
        p = polys[0]
        return _to_s(p) if p.degree(var) == 0 else S_RING.zero()
    return _gcd_all(conds)


@dataclass
class CaseCondition:
    case: str
    condition: Poly

    def to_json(self):
        return {"case": self.case, "condition": str(self.condition)}


def case_conditions(reverse: bool = False) -> list[CaseCondition]:
    """Polynomial conditions on s, one per case of vanishing coordinates."""
    G = _cubic_pencil(reverse)
    Ga, Gb, Gc = G.diff("a"), G.diff("b"), G.diff("c")
    a, b = ABCS.gen("a"), ABCS.gen("b")
    out = []

    # no coordinate zero, chart c = 1, away from a = 1
    chart = [p.partial_evaluate({"c": 1}) for p in (Ga, Gb, Gc)]
    pair_res = [
        _strip(resultant(chart[i], chart[j], "b"), a - 1) for i, j in ((0, 1), (0, 2), (1, 2))
    ]
    conds = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        conds.append(_to_s(resultant(pair_res[i], pair_res[j], "a")))
    out.append(CaseCondition("interior", _gcd_all(conds)))

    # no coordinate zero, on the line a = 1 (c = 1), away from the base point b = 1
    on_line = [_strip(p.partial_evaluate({"a": 1}), b - 1) for p in chart]
    out.append(CaseCondition("interior_a=1", _common_roots_condition(on_line, "b")))

    # exactly one coordinate zero
    out.append(CaseCondition("w1=0", _common_roots_condition(
        [p.partial_evaluate({"a": 0, "c": 1}) for p in (Gb, Gc)], "b")))
    out.append(CaseCondition("w2=0", _common_roots_condition(
        [p.partial_evaluate({"b": 0, "c": 1}) for p in (Ga, Gc)], "a")))
    out.append(CaseCondition("w3=0", _common_roots_condition(
        [p.partial_evaluate({"c": 0, "b": 1}) for p in (Ga, Gb)], "a")))

    # vertices
    for name, pt, d in (("vertex1", (1, 0, 0), Ga), ("vertex2", (0, 1, 0), Gb), ("vertex3", (0, 0, 1), Gc)):
        out.append(CaseCondition(name, _to_s(d.partial_evaluate(dict(zip("abc", pt))))))

    # tangent cone at the base points (the map w -> w^2 is etale there, so use G at (1,1,1))
    g1 = G.partial_evaluate({"c": 1})
    haa, hab, hbb = g1.diff("a").diff("a"), g1.diff("a").diff("b"), g1.diff("b").diff("b")
    at = {"a": 1, "b": 1}
    det = haa.partial_evaluate(at) * hbb.partial_evaluate(at) - hab.partial_evaluate(at) ** 2
    out.append(CaseCondition("base_point_tangent_cone", _to_s(det)))
    return out


def squarefree_part(p: Poly) -> Poly:
    if p.degree("s") <= 0:
        return p
    g = univariate_gcd(p, p.diff("s"), "s")
    q = exact_divide(p, g)
    return q.monic()


def _rational_roots(p: Poly) -> list[Fraction]:
    """Rational roots of a univariate polynomial with rational coefficients."""
    from math import gcd

    coeffs = {k: Fraction(v.constant_value()) for k, v in p.coeffs_in("s").items()}
    lcm = 1
    for c in coeffs.values():
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    ints = {k: int(c * lcm) for k, c in coeffs.items()}
    low = min(ints)
    if low > 0:
        ints = {k - low: v for k, v in ints.items()}
    roots = [Fraction(0)] if low > 0 else []
    a0, an = abs(ints[0]), abs(ints[max(ints)])

    def divisors(n):
        return [d for d in range(1, n + 1) if n % d == 0] if n else [1]

    for num in divisors(a0):
        for den in divisors(an):
            for sign in (1, -1):
                r = Fraction(sign * num, den)
                if r not in roots and p.evaluate([r]) == 0:
                    roots.append(r)
    return sorted(roots)


def irreducible_factors(p: Poly) -> list[Poly]:
    """Monic irreducible factors over Q of a squarefree polynomial of small degree.

    Linear factors come from rational roots; what remains must be an even
    polynomial whose factors in ``X = s^2`` are linear, giving quadratics
    ``s^2 - r`` that are irreducible when ``r`` is not a rational square.
    """
    s = S_RING.gen("s")
    factors = []
    rest = p.monic()
    for r in _rational_roots(rest):
        lin = s - r
        factors.append(lin)
        rest = exact_divide(rest, lin)
    if rest.degree("s") > 0:
        coeffs = rest.coeffs_in("s")
        if any(k % 2 for k in coeffs):
            raise ValueError(f"cannot factor {rest} with the small-degree method")
        X = PolyRing(("s",))
        half = Poly(X, {(k // 2,): v.constant_value() for k, v in coeffs.items()})
        for r in _rational_roots(half):
            if sqrt_in_field(r) is not None and not isinstance(sqrt_in_field(r), QuadraticNumber):
                raise ValueError("unexpected rational root after removing linear factors")
            quad = s**2 - r
            factors.append(quad)
            rest = exact_divide(rest, quad)
        if rest.degree("s") > 0:
            raise ValueError(f"cannot factor {rest} with the small-degree method")
    return sorted(factors, key=lambda f: (f.degree("s"), str(f)))


def roots_of_factor(f: Poly) -> list[Scalar]:
    c = {k: v.constant_value() for k, v in f.coeffs_in("s").items()}
    if f.degree("s") == 1:
        return [divide(-c.get(0, 0), c[1])]
    r = sqrt_in_field(divide(-c.get(0, 0), c[2]))
    return [r, -r]


def primitive_integer_form(f: Poly) -> Poly:
    """Scale to coprime integer coefficients with positive leading coefficient (e.g. 125 s^2 - 1)."""
    return f.primitive()


# ---------------------------------------------------------------------------
# back-substitution witnesses
# ---------------------------------------------------------------------------


def _linear_root(p: Poly, var: str) -> Scalar | None:
    if p.degree(var) != 1:
        return None
    c = p.coeffs_in(var)
    c0 = c[0].constant_value() if 0 in c else 0
    return divide(-c0, c[1].constant_value())


def _univariate_common_root(polys: list[Poly], var: str) -> list[Scalar]:
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return []
    g = polys[0]
    for p in polys[1:]:
        g = univariate_gcd(g, p, var)
    r = _linear_root(g, var)
    return [r] if r is not None else []


def singular_point_witness(s0: Scalar) -> tuple | None:
    """An exact singular point of F_{s0} in w-coordinates that is not a base point, or None."""
    G = _cubic_pencil().partial_evaluate({"s": s0})
    Ga, Gb, Gc = G.diff("a"), G.diff("b"), G.diff("c")
    candidates: list[tuple] = []
    for pt in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        candidates.append(pt)
    for a0 in _univariate_common_root([p.partial_evaluate({"c": 0, "b": 1}) for p in (Ga, Gb)], "a"):
        candidates.append((a0, 1, 0))
    for a0 in _univariate_common_root([p.partial_evaluate({"b": 0, "c": 1}) for p in (Ga, Gc)], "a"):
        candidates.append((a0, 0, 1))
    for b0 in _univariate_common_root([p.partial_evaluate({"a": 0, "c": 1}) for p in (Gb, Gc)], "b"):
        candidates.append((0, b0, 1))
    F = wiman_edge_member(s0)
    grad = F.gradient()
    for abc in candidates:
        w = []
        for x in abc:
            r = sqrt_in_field(x)
            if r is None:
                break
            w.append(r)
        else:
            try:
                vals = [F.evaluate(w)] + [g.evaluate(w) for g in grad]
            except Exception:  # roots from incompatible quadratic fields
                continue
            if all(v == 0 for v in vals) and not _is_base_point(w):
                return tuple(w)
    # degenerate tangent cone at a base point
    if s0 == 0:
        return (1, 1, 1) if _tangent_cone_degenerate(s0) else None
    return None


def _is_base_point(w) -> bool:
    for bp in WIMAN_EDGE_BASE_POINTS:
        if all(w[i] * bp[j] == w[j] * bp[i] for i in range(3) for j in range(3)):
            return True
    return False


def _tangent_cone_degenerate(s0: Scalar) -> bool:
    for cc in case_conditions():
        if cc.case == "base_point_tangent_cone":
            return cc.condition.evaluate([s0]) == 0
    return False


# ---------------------------------------------------------------------------
# driver
# ---------------------------------------------------------------------------


@dataclass
class WimanEdgeResult:
    cases: list[CaseCondition]
    locus: Poly  # squarefree, monic
    factors: list[Poly]  # primitive integer forms
    witnesses: dict = field(default_factory=dict)  # factor -> {root: point}
    infinity_singular: bool = False

    @property
    def singular_parameters(self) -> list[Scalar]:
        return [r for f in self.factors for r in roots_of_factor(f)]

    def to_json(self) -> dict:
        return {
            "factors": [str(f) for f in self.factors],
            "parameters": [format_scalar(r) for r in self.singular_parameters],
            "cases": [c.to_json() for c in self.cases],
            "witnesses": {
                k: {format_scalar(r): [format_scalar(x) for x in w] for r, w in v.items()}
                for k, v in self.witnesses.items()
            },
            "infinity_singular": self.infinity_singular,
        }


@lru_cache(maxsize=1)
def wiman_edge_elimination() -> WimanEdgeResult:
    cases = case_conditions()
    product = S_RING.one()
    for c in cases:
        if c.condition.is_zero():
            raise ArithmeticError(f"elimination degenerated in case {c.case}")
        product = product * c.condition
    locus = squarefree_part(product)
    factors = [primitive_integer_form(f) for f in irreducible_factors(locus)]
    witnesses = {}
    for f in factors:
        witnesses[str(f)] = {r: singular_point_witness(r) for r in roots_of_factor(f)}
    # member at s = infinity: parameter s' = 1/s = 0 in the reversed pencil
    inf_cases = case_conditions(reverse=True)
    inf_sing = any(c.condition.is_zero() or c.condition.evaluate([0]) == 0 for c in inf_cases)
    return WimanEdgeResult(cases, locus, factors, witnesses, inf_sing)


def wiman_edge_singular_params() -> list[Poly]:
    """Irreducible polynomials over Q (integer primitive form) whose roots are the singular members."""
    return wiman_edge_elimination().factors


def multiplicity_at(f: Poly, point) -> int:
    """Order of vanishing of ``f`` at a point (smallest k with a nonzero k-th derivative)."""
    layer = [f]
    k = 0
    while True:
        if any(g.evaluate(point) != 0 for g in layer):
            return k
        layer = [g.diff(n) for g in layer for n in f.ring.names]
        layer = list({str(g): g for g in layer if not g.is_zero()}.values())
        k += 1
        if not layer:
            raise ValueError("the zero polynomial has no multiplicity")


def base_point_check() -> CheckReport:
    """Each base point is singular on both sextics (value and gradient vanish)."""
    start = time.perf_counter()
    bad = []
    multiplicities = {}
    for name, f in zip(("P0", "P_inf"), wiman_edge_sextics(W_RING)):
        grad = f.gradient()
        for bp in WIMAN_EDGE_BASE_POINTS:
            if f.evaluate(bp) != 0 or any(g.evaluate(bp) != 0 for g in grad):
                bad.append((name, bp))
        multiplicities[name] = [multiplicity_at(f, bp) for bp in WIMAN_EDGE_BASE_POINTS]
    return report("wiman_edge_base_points", not bad, witness=bad,
                  details={"multiplicities": multiplicities}, started=start)


def singular_members_check() -> CheckReport:
    start = time.perf_counter()
    res = wiman_edge_elimination()
    got = sorted(str(f) for f in res.factors)
    missing_witness = [(k, format_scalar(r)) for k, v in res.witnesses.items() for r, w in v.items() if w is None]
    ok = not missing_witness and not res.infinity_singular
    return report(
        "wiman_edge_singular_members",
        ok,
        witness={"missing_witness": missing_witness, "infinity_singular": res.infinity_singular},
        details=res.to_json() | {"factor_strings": got},
        started=start,
    )
