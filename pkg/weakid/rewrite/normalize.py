"""
Normalization of G-polynomials and enumeration of the normal-form set B
"""

import logging
from itertools import permutations, product
from typing import Dict, Iterable, List, Optional, Sequence

from ..arith import CycNum
from ..errors import NormalFormAlphabetError, RuleSoundnessError, StepBudgetExceeded, TerminationMeasureError
from ..groups import GroupSpec
from ..gpoly.evaluate import Evaluator
from ..gpoly.terms import GMonomial, GPolynomial, Letter
from .base import RuleSet, Word
from .cyclic import CyclicRules, TrivialRules, Z2Rules
from .dihedral import DihedralRules
from .epsilon import EpsilonRules

logger = logging.getLogger(__name__)

DEFAULT_STEP_BUDGET = 200_000

RULESETS = {
    "cyclic": CyclicRules,
    "z2": Z2Rules,
    "trivial": TrivialRules,
    "dihedral": DihedralRules,
    "epsilon": EpsilonRules,
}

_CACHE: Dict[GroupSpec, RuleSet] = {}


def family_of(spec: GroupSpec) -> str:
    if spec.is_epsilon_group:
        return "epsilon"
    if spec.is_dihedral:
        return "dihedral"
    if spec.n == 1:
        return "trivial"
    if spec.n == 2:
        return "z2"
    return "cyclic"


def get_ruleset(name: str, spec: GroupSpec) -> RuleSet:
    """Get a rule set by family name"""
    if name not in RULESETS:
        available = ", ".join(RULESETS.keys())
        raise ValueError(f"Unknown rule set '{name}'. Available: {available}")
    return RULESETS[name](spec)


def rules_for(spec: GroupSpec) -> RuleSet:
    ruleset = _CACHE.get(spec)
    if ruleset is None:
        ruleset = get_ruleset(family_of(spec), spec)
        _CACHE[spec] = ruleset
    return ruleset


def _lift(coef, conductor: int) -> CycNum:
    return coef if isinstance(coef, CycNum) else CycNum.from_rational(coef, conductor)


def normalize(
    f: GPolynomial,
    spec: GroupSpec,
    rules: Optional[RuleSet] = None,
    step_budget: int = DEFAULT_STEP_BUDGET,
    check_steps: bool = False,
    evaluator: Optional[Evaluator] = None,
) -> GPolynomial:
    """Rewrite f until every monomial is irreducible.

    With ``check_steps`` every step is verified to preserve the evaluation and to
    decrease the termination measure.
    """
    rules = rules or rules_for(spec)
    conductor = f.conductor
    if check_steps and evaluator is None:
        evaluator = Evaluator(rules.table)
    pending: Dict[Word, CycNum] = {}
    for m, c in f.items():
        pending[m.word] = c
    done: Dict[Word, CycNum] = {}
    steps = 0
    while pending:
        word, coef = pending.popitem()
        if coef.is_zero():
            continue
        step = rules.rewrite_once(word)
        if step is None:
            s = done.get(word)
            done[word] = coef if s is None else s + coef
            continue
        rule, outputs = step
        steps += 1
        if steps > step_budget:
            raise StepBudgetExceeded(
                f"normalization exceeded {step_budget} steps (last rule {rule.tag} on {GMonomial(word)})"
            )
        if check_steps:
            _check_step(rules, rule.tag, word, outputs, evaluator, conductor)
        for c, w in outputs:
            value = coef * _lift(c, conductor)
            s = pending.get(w)
            pending[w] = value if s is None else s + value
    logger.debug("normalized %d terms in %d steps", len(f), steps)
    return GPolynomial.from_terms(conductor, [(GMonomial(w), c) for w, c in done.items()])


def _check_step(rules: RuleSet, tag: str, word: Word, outputs, evaluator: Evaluator, conductor: int) -> None:
    before = rules.measure(word)
    for _, w in outputs:
        if not rules.measure(w) < before:
            raise TerminationMeasureError(f"rule {tag} did not decrease the termination measure on {GMonomial(word)}")
    lhs = evaluator.monomial(GMonomial(word))
    rhs = evaluator(GPolynomial.from_terms(conductor, [(GMonomial(w), _lift(c, conductor)) for c, w in outputs]))
    if lhs != rhs:
        raise RuleSoundnessError(f"rule {tag} changed the evaluation of {GMonomial(word)}")


def is_normal_form(m: GMonomial, spec: GroupSpec, rules: Optional[RuleSet] = None) -> bool:
    """Membership in B; letters outside the normal-form alphabet are rejected."""
    rules = rules or rules_for(spec)
    for letter in m:
        if letter.op not in rules.alphabet:
            raise NormalFormAlphabetError(
                f"Letter {letter} is outside the normal-form alphabet {', '.join(rules.alphabet)} of {spec.label}"
            )
    return rules.normal_form(m.word)


def words_of_multidegree(alphabet: Sequence[str], multidegree: Iterable[int]) -> List[GMonomial]:
    """Every word whose variables form the given multiset, one letter per occurrence."""
    variables = tuple(sorted(multidegree))
    orders = sorted(set(permutations(variables)))
    words = []
    for order in orders:
        for ops in product(alphabet, repeat=len(order)):
            words.append(GMonomial(tuple(Letter(op, v) for op, v in zip(ops, order))))
    return words


def enumerate_B(spec: GroupSpec, multidegree: Iterable[int], rules: Optional[RuleSet] = None) -> List[GMonomial]:
    """Elements of B of the given multidegree, in canonical monomial order."""
    rules = rules or rules_for(spec)
    found = {m for m in words_of_multidegree(rules.alphabet, multidegree) if rules.normal_form(m.word)}
    return sorted(found, key=GMonomial.sort_key)
