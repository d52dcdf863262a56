"""
Rule sets for the cyclic groups: Zn with n >= 3, the Z2 grading and the trivial group
"""

from typing import List, Optional

from ..gpoly.terms import Letter
from .base import Replacement, Rule, RuleSet, Word, expansion_rule, inversions, is_sorted, ordered_pairs

E0 = "e0"
SIGNED = {"e1": 1, "e-1": -1}


def opposite(op: str) -> str:
    return "e-1" if op == "e1" else "e1"


def _is_diagonal(letter: Letter) -> bool:
    return letter.op == E0


def _is_signed(letter: Letter) -> bool:
    return letter.op in SIGNED


def _square_zero(window: Word, table) -> Optional[Replacement]:
    x, y = window
    if _is_signed(x) and x.op == y.op:
        return []
    return None


def _diagonal_left(window: Word, table) -> Optional[Replacement]:
    x, y = window
    if _is_signed(x) and _is_diagonal(y):
        return [(-1, (y, x))]
    return None


def _sort_diagonal(window: Word, table) -> Optional[Replacement]:
    x, y = window
    if _is_diagonal(x) and _is_diagonal(y) and x.var > y.var:
        return [(1, (y, x))]
    return None


def _sort_alternating(window: Word, table) -> Optional[Replacement]:
    x, y, z = window
    if _is_signed(x) and z.op == x.op and y.op == opposite(x.op) and x.var > z.var:
        return [(1, (z, y, x))]
    return None


def split_diagonal(word: Word) -> int:
    """Length of the leading run of e0 letters."""
    k = 0
    while k < len(word) and _is_diagonal(word[k]):
        k += 1
    return k


def alternating_sorted(chain: Word) -> bool:
    """Odd and even positions of the chain are each non-decreasing in the variable index."""
    return is_sorted([x.var for x in chain[0::2]]) and is_sorted([x.var for x in chain[1::2]])


class CyclicRules(RuleSet):
    """Zn, n >= 3: letters e0, e1, e-1.

    B = e0(x)^n e_a(x_i1) e_-a(x_j1) ... with i1 <= i2 <= ... and j1 <= j2 <= ...
    """

    family = "cyclic"
    measure_description = (
        "(raw group letters, e+-1 before e0 pairs, e0 inversions, inversions within e1 and within e-1)"
    )

    def build_rules(self) -> List[Rule]:
        return [
            expansion_rule("lemma6.1", "g^j(x) -> e0(x) + w^j*e1(x) + w^-j*e-1(x)"),
            Rule("lemma6.2", "e_a(x1)*e_a(x2) -> 0", 2, _square_zero),
            Rule("lemma6.5", "e_a(x2)*e0(x1) -> -e0(x1)*e_a(x2)", 2, _diagonal_left),
            Rule("lemma6.3", "e0(xj)*e0(xi) -> e0(xi)*e0(xj), i < j", 2, _sort_diagonal),
            Rule("lemma6.4", "e_a(xk)*e_-a(x2)*e_a(xi) -> e_a(xi)*e_-a(x2)*e_a(xk), i < k", 3, _sort_alternating),
        ]

    def measure(self, word: Word) -> tuple:
        return (
            self.raw_count(word),
            ordered_pairs(word, _is_signed, _is_diagonal),
            inversions([x.var for x in word if _is_diagonal(x)]),
            sum(inversions([x.var for x in word if x.op == op]) for op in SIGNED),
        )

    def normal_form(self, word: Word) -> bool:
        k = split_diagonal(word)
        if not is_sorted([x.var for x in word[:k]]):
            return False
        chain = word[k:]
        if not all(_is_signed(x) for x in chain):
            return False
        if any(chain[p].op == chain[p + 1].op for p in range(len(chain) - 1)):
            return False
        return alternating_sorted(chain)


def _z2_anticommute(window: Word, table) -> Optional[Replacement]:
    x, y = window
    if x.op == "e1" and _is_diagonal(y):
        return [(-1, (y, x))]
    return None


def _z2_sort_odd(window: Word, table) -> Optional[Replacement]:
    x, y, z = window
    if x.op == y.op == z.op == "e1" and x.var > z.var:
        return [(1, (z, y, x))]
    return None


class Z2Rules(RuleSet):
    """Zn:2, letters e0 = pi0/2 and e1 = pi1/2.

    B = e0 letters sorted, then e1 letters whose odd and even positions are each sorted.
    """

    family = "z2"
    measure_description = "(raw group letters, e1 before e0 pairs, e0 inversions, e1 inversions per position parity)"

    def build_rules(self) -> List[Rule]:
        return [
            expansion_rule("z2.0", "x -> e0(x) + e1(x), g(x) -> e0(x) - e1(x)"),
            Rule("z2.3", "e1(x2)*e0(x1) -> -e0(x1)*e1(x2)", 2, _z2_anticommute),
            Rule("z2.1", "e0(xj)*e0(xi) -> e0(xi)*e0(xj), i < j", 2, _sort_diagonal),
            Rule("z2.2", "e1(xk)*e1(x2)*e1(xi) -> e1(xi)*e1(x2)*e1(xk), i < k", 3, _z2_sort_odd),
        ]

    def measure(self, word: Word) -> tuple:
        parity = sum(
            inversions([x.var for pos, x in enumerate(word) if x.op == "e1" and pos % 2 == r]) for r in (0, 1)
        )
        return (
            self.raw_count(word),
            ordered_pairs(word, lambda x: x.op == "e1", _is_diagonal),
            inversions([x.var for x in word if _is_diagonal(x)]),
            parity,
        )

    def normal_form(self, word: Word) -> bool:
        k = split_diagonal(word)
        if not is_sorted([x.var for x in word[:k]]):
            return False
        chain = word[k:]
        return all(x.op == "e1" for x in chain) and alternating_sorted(chain)


class TrivialRules(RuleSet):
    """Zn:1: every operator acts as a scalar and B is every word in id letters."""

    family = "trivial"
    measure_description = "(raw letters)"

    def build_rules(self) -> List[Rule]:
        return [expansion_rule("trivial.0", "op(x) -> c*x")]

    def measure(self, word: Word) -> tuple:
        return (self.raw_count(word),)

    def normal_form(self, word: Word) -> bool:
        return all(x.op == "id" for x in word)
