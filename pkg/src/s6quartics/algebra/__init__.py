"""Exact arithmetic substrate: scalars, sparse polynomials, matrices, resultants."""

from .matrix import (
    PolyMatrix,
    ScalarMatrix,
    bareiss_det,
    determinant,
    kernel,
    rank_of_vectors,
    resultant,
    rref,
    sylvester_matrix,
    univariate_gcd,
)
from .parse import ParseError, parse_point, parse_poly, parse_scalar
from .poly import (
    ContextMismatchError,
    NotDivisibleError,
    Poly,
    PolyRing,
    divides,
    elementary_symmetric,
    elementary_symmetric_of,
    exact_divide,
    format_poly,
    power_sum,
    proportionality_factor,
)
from .scalars import (
    FieldMismatchError,
    QuadraticNumber,
    conjugate,
    divide,
    field_of,
    format_scalar,
    inverse,
    primitive_cube_root_of_unity,
    scalar_kind,
    sqrt_in_field,
)

__all__ = [
    "ContextMismatchError",
    "FieldMismatchError",
    "NotDivisibleError",
    "ParseError",
    "Poly",
    "PolyMatrix",
    "PolyRing",
    "QuadraticNumber",
    "ScalarMatrix",
    "bareiss_det",
    "conjugate",
    "determinant",
    "divide",
    "divides",
    "elementary_symmetric",
    "elementary_symmetric_of",
    "exact_divide",
    "field_of",
    "format_poly",
    "format_scalar",
    "inverse",
    "kernel",
    "parse_point",
    "parse_poly",
    "parse_scalar",
    "power_sum",
    "primitive_cube_root_of_unity",
    "proportionality_factor",
    "rank_of_vectors",
    "resultant",
    "rref",
    "scalar_kind",
    "sqrt_in_field",
    "sylvester_matrix",
    "univariate_gcd",
]
