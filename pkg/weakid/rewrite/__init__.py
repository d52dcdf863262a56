"""
Terminating rewriting systems for the weak G-identities and their normal forms
"""

from .base import Rule, RuleSet, expansion_rule
from .cyclic import CyclicRules, TrivialRules, Z2Rules
from .dihedral import DihedralRules
from .epsilon import EpsilonRules
from .normalize import (
    DEFAULT_STEP_BUDGET,
    RULESETS,
    enumerate_B,
    family_of,
    get_ruleset,
    is_normal_form,
    normalize,
    rules_for,
    words_of_multidegree,
)

__all__ = [
    "Rule",
    "RuleSet",
    "expansion_rule",
    "CyclicRules",
    "TrivialRules",
    "Z2Rules",
    "DihedralRules",
    "EpsilonRules",
    "DEFAULT_STEP_BUDGET",
    "RULESETS",
    "enumerate_B",
    "family_of",
    "get_ruleset",
    "is_normal_form",
    "normalize",
    "rules_for",
    "words_of_multidegree",
]
