"""
The pair (M2, sl2): matrices over polynomial rings and generic matrices
"""

from .matrix import (
    Mat2,
    SL2Coords,
    commutator,
    generic_matrix,
    is_zero_mat,
    mat_mul,
)

__all__ = [
    "Mat2",
    "SL2Coords",
    "commutator",
    "generic_matrix",
    "is_zero_mat",
    "mat_mul",
]
