"""
Finite groups acting on sl2 and their operators
"""

from .actions import (
    action_generator_g,
    action_generator_h,
    adjoint,
    adjoint_of_pgl2,
    canonical_index,
    conjugated_action,
    epsilon,
    h_idempotent,
    idempotent,
    pi_operators,
)
from .algebra import GAElem
from .generators import GENERATORS, generator_operators, shipped_generators
from .irreducible import IrreducibilityReport, check_irreducible, group_closure
from .operators import Op3
from .spec import GroupKind, GroupSpec
from .table import OperatorTable, basis_letters, operator_table

__all__ = [
    "action_generator_g",
    "action_generator_h",
    "adjoint",
    "adjoint_of_pgl2",
    "canonical_index",
    "conjugated_action",
    "epsilon",
    "h_idempotent",
    "idempotent",
    "pi_operators",
    "GAElem",
    "GENERATORS",
    "generator_operators",
    "shipped_generators",
    "IrreducibilityReport",
    "check_irreducible",
    "group_closure",
    "Op3",
    "GroupKind",
    "GroupSpec",
    "OperatorTable",
    "basis_letters",
    "operator_table",
]
