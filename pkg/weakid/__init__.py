"""
weakid - exact weak G-identities of the pair (M2, sl2)
"""

__version__ = "1.0.0"

from .groups import GroupSpec  # noqa: E402
from .gpoly import GPolynomial, evaluate, is_weak_g_identity, parse  # noqa: E402
from .rewrite import enumerate_B, is_normal_form, normalize  # noqa: E402

__all__ = [
    "GroupSpec",
    "GPolynomial",
    "evaluate",
    "is_weak_g_identity",
    "parse",
    "enumerate_B",
    "is_normal_form",
    "normalize",
]
