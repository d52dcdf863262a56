"""
Identity verification and bounded-degree basis certificates
"""

from .certificate import (
    Certificate,
    IdentityRecord,
    MultidegreeRecord,
    certified_multidegrees,
    certify_basis,
    certify_multidegree,
    check_spanning,
    compositions,
    recover_normal_form,
)
from .identities import (
    SUITES,
    IdentityInstance,
    IdentityResult,
    build_suite,
    check_identity,
    first_nonzero_entry,
    gaussian_lift,
    random_conjugators,
    suite_templates,
    suites_for,
    verify_conjugated,
    verify_identity_suite,
)
from .linalg import EvalVector, IndependenceResult, distinct_supports, independence_check
from .oracle import DEFAULT_ORACLE_BUDGET, ambient_dimension, quotient_dimension_oracle, spanning_operators

__all__ = [
    "Certificate",
    "IdentityRecord",
    "MultidegreeRecord",
    "certified_multidegrees",
    "certify_basis",
    "certify_multidegree",
    "check_spanning",
    "compositions",
    "recover_normal_form",
    "SUITES",
    "IdentityInstance",
    "IdentityResult",
    "build_suite",
    "check_identity",
    "first_nonzero_entry",
    "gaussian_lift",
    "random_conjugators",
    "suite_templates",
    "suites_for",
    "verify_conjugated",
    "verify_identity_suite",
    "EvalVector",
    "IndependenceResult",
    "distinct_supports",
    "independence_check",
    "DEFAULT_ORACLE_BUDGET",
    "ambient_dimension",
    "quotient_dimension_oracle",
    "spanning_operators",
]
