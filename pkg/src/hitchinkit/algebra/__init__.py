"""Exact rational arithmetic substrate: polynomials, series, linear algebra."""

from .laurent import BranchSpec, LaurentSeries, SeriesError, branch_expansion, laurent_expand, rational_sqrt
from .parse import PolySyntaxError, parse_poly
from .poly import PolynomialError, RationalPoly, VariableMismatch, as_fraction, exact_divide, poly_arith
from .univariate import discriminant_univariate, rational_roots, resultant

__all__ = [
    "BranchSpec", "LaurentSeries", "PolySyntaxError", "PolynomialError", "RationalPoly",
    "SeriesError", "VariableMismatch", "as_fraction", "branch_expansion", "discriminant_univariate",
    "exact_divide", "laurent_expand", "parse_poly", "poly_arith", "rational_roots", "rational_sqrt", "resultant",
]
