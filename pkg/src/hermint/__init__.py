"""Exact integrals of products of Hermite polynomials against e^{-2x^2}.

All integrals are normalized by sqrt(2/pi), which makes every value an
exact rational.
"""
__version__ = "0.1.0"

from ._kernels import BACKEND
from .closed import (QuadIndex, closed_H1, closed_H2, closed_H3, closed_H4,
                     expanded_coeff_H1, expanded_coeff_H2, recurrence_H4)
from .det import DetSpec, asym_table, dn_normalized, dn_terms, log_magnitude
from .exact import Rat, binomial, double_factorial, is_even_sum
from .hermite import hermite, hermite_product, poly_mul
from .moments import integrate_poly, moment, oracle_H
from .pk import (pk_ansatz_solve, pk_interpolate, pk_recursion_check,
                 pk_value_via_recurrence, triviality_product)
from .poly3 import Poly3, SymPoly3
from .series import SeriesMV, gf_coefficient_H, gf_rhs

__all__ = [
    "BACKEND", "QuadIndex", "closed_H1", "closed_H2", "closed_H3", "closed_H4",
    "expanded_coeff_H1", "expanded_coeff_H2", "recurrence_H4", "DetSpec", "asym_table",
    "dn_normalized", "dn_terms", "log_magnitude", "Rat", "binomial", "double_factorial",
    "is_even_sum", "hermite", "hermite_product", "poly_mul", "integrate_poly", "moment",
    "oracle_H", "pk_ansatz_solve", "pk_interpolate", "pk_recursion_check",
    "pk_value_via_recurrence", "triviality_product", "Poly3", "SymPoly3", "SeriesMV",
    "gf_coefficient_H", "gf_rhs",
]
