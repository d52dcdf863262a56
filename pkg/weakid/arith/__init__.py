"""
Exact arithmetic: cyclotomic fields and sparse polynomials
"""

from .cyclotomic import CycNum, cyc_embed, cyclotomic_polynomial, euler_phi
from .linalg import RowReducer
from .mpoly import MPoly, Monomial, Var, a, b, c, monomial_mul

__all__ = [
    "CycNum",
    "cyc_embed",
    "cyclotomic_polynomial",
    "euler_phi",
    "MPoly",
    "RowReducer",
    "Monomial",
    "Var",
    "a",
    "b",
    "c",
    "monomial_mul",
]
