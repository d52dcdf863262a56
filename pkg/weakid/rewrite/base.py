"""
Rewrite rules, rule sets and the helpers shared by every group family
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

from ..arith import CycNum
from ..groups import GroupSpec, OperatorTable, operator_table
from ..gpoly.terms import Letter

Word = Tuple[Letter, ...]
Coefficient = Union[int, CycNum]
# result of a rule on its window: [] rewrites to zero, None means the rule does not match
Replacement = List[Tuple[Coefficient, Word]]
RuleFn = Callable[[Word, OperatorTable], Optional[Replacement]]


@dataclass(frozen=True)
class Rule:
    """One oriented identity acting on a window of ``width`` adjacent letters."""
    tag: str
    pattern: str
    width: int
    apply: RuleFn = field(compare=False, repr=False)

    def __call__(self, window: Word, table: OperatorTable) -> Optional[Replacement]:
        return self.apply(window, table)


def inversions(values: Sequence) -> int:
    """Number of pairs p < q with values[p] > values[q]."""
    return sum(1 for p in range(len(values)) for q in range(p + 1, len(values)) if values[p] > values[q])


def ordered_pairs(word: Word, first: Callable[[Letter], bool], second: Callable[[Letter], bool]) -> int:
    """Pairs p < q with first(word[p]) and second(word[q])."""
    count = 0
    seen = 0
    for letter in word:
        if second(letter):
            count += seen
        if first(letter):
            seen += 1
    return count


def is_sorted(values: Sequence) -> bool:
    return all(values[p] <= values[p + 1] for p in range(len(values) - 1))


def expansion_rule(tag: str, pattern: str, skip: Iterable[str] = ()) -> Rule:
    """Replace a letter outside the basis alphabet by its basis-letter expansion."""
    skipped = frozenset(skip)

    def apply(window: Word, table: OperatorTable) -> Optional[Replacement]:
        (x,) = window
        if table.is_basis_letter(x.op) or x.op in skipped:
            return None
        return [(coef, (Letter(name, x.var),)) for name, coef in table.decompose(x.op)]

    return Rule(tag, pattern, 1, apply)


class RuleSet(ABC):
    """Oriented identities of one group family together with its normal-form set B"""

    family: str = ""
    measure_description: str = ""

    def __init__(self, spec: GroupSpec, rules: Optional[Sequence[Rule]] = None):
        self.spec = spec
        self.table = operator_table(spec)
        self.alphabet: Tuple[str, ...] = tuple(self.table.basis_names)
        self.rules: Tuple[Rule, ...] = tuple(rules) if rules is not None else tuple(self.build_rules())

    @abstractmethod
    def build_rules(self) -> List[Rule]:
        """The rules in the order they are tried at each position."""
        pass

    @abstractmethod
    def measure(self, word: Word) -> tuple:
        """Termination measure; every rule output is lexicographically smaller."""
        pass

    @abstractmethod
    def normal_form(self, word: Word) -> bool:
        """Membership in B for a word over the basis alphabet."""
        pass

    def is_raw(self, letter: Letter) -> bool:
        return letter.op not in self.alphabet

    def raw_count(self, word: Word) -> int:
        return sum(1 for letter in word if self.is_raw(letter))

    @property
    def tags(self) -> List[str]:
        return [rule.tag for rule in self.rules]

    def describe(self) -> List[str]:
        lines = [f"{rule.tag}: {rule.pattern}" for rule in self.rules]
        lines.append(f"measure: {self.measure_description}")
        return lines

    def without(self, tag: str) -> "RuleSet":
        """Copy with the rule ``tag`` removed (mutation controls)."""
        remaining = [rule for rule in self.rules if rule.tag != tag]
        if len(remaining) == len(self.rules):
            raise KeyError(f"No rule tagged '{tag}' in the {self.family} rule set. Available: {', '.join(self.tags)}")
        return type(self)(self.spec, remaining)

    def rewrite_once(self, word: Word) -> Optional[Tuple[Rule, Replacement]]:
        """Leftmost position first; at each position the first matching rule wins."""
        for pos in range(len(word)):
            for rule in self.rules:
                end = pos + rule.width
                if end > len(word):
                    continue
                result = rule(word[pos:end], self.table)
                if result is not None:
                    return rule, [(coef, word[:pos] + part + word[end:]) for coef, part in result]
        return None

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.spec.label}, {len(self.rules)} rules)"
