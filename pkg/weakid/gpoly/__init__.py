"""
G-polynomials: words in operator-applied variables, their text syntax and evaluation
"""

from .evaluate import Evaluator, evaluate, is_weak_g_identity
from .parser import parse, tokenize
from .terms import GMonomial, GPolynomial, Letter, commutator, format_polynomial, op_sort_key

__all__ = [
    "Evaluator",
    "evaluate",
    "is_weak_g_identity",
    "parse",
    "tokenize",
    "GMonomial",
    "GPolynomial",
    "Letter",
    "commutator",
    "format_polynomial",
    "op_sort_key",
]
