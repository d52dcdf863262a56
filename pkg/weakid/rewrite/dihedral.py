"""
Rule set for the dihedral groups Dn, n >= 3
"""

from typing import List, Optional

from ..gpoly.terms import Letter
from .base import Replacement, Rule, RuleSet, Word, expansion_rule, inversions, is_sorted, ordered_pairs
from .cyclic import E0, SIGNED, split_diagonal

# letter -> (alpha, is he-letter); alpha also names the entry the letter reads (c for +1, b for -1)
OFF_DIAGONAL = {
    "e1": (1, False),
    "e-1": (-1, False),
    "he1": (1, True),
    "he-1": (-1, True),
}

# e21 (lower) or e12 (upper) part of sl2 a letter lands in
_SHAPE = {"e1": "L", "e-1": "U", "he1": "U", "he-1": "L"}


def _kind(letter: Letter) -> int:
    return OFF_DIAGONAL[letter.op][0]


def _is_h(letter: Letter) -> bool:
    return letter.op in OFF_DIAGONAL and OFF_DIAGONAL[letter.op][1]


def _is_off(letter: Letter) -> bool:
    return letter.op in OFF_DIAGONAL


def _e(alpha: int) -> str:
    return "e1" if alpha == 1 else "e-1"


def _he(alpha: int) -> str:
    return "he1" if alpha == 1 else "he-1"


def _h_on_diagonal(window: Word, table) -> Optional[Replacement]:
    (x,) = window
    if x.op == "he0":
        return [(-1, (Letter(E0, x.var),))]
    return None


def _anticommute(window: Word, table) -> Optional[Replacement]:
    x, y = window
    if _is_off(x) and y.op == E0:
        return [(-1, (y, x))]
    return None


def _sort_diagonal(window: Word, table) -> Optional[Replacement]:
    x, y = window
    if x.op == y.op == E0 and x.var > y.var:
        return [(1, (y, x))]
    return None


def _square_zero(window: Word, table) -> Optional[Replacement]:
    x, y = window
    if _is_off(x) and x.op == y.op:
        return []
    return None


def _mixed_zero(window: Word, table) -> Optional[Replacement]:
    x, y = window
    if _is_off(x) and _is_off(y) and x.op != y.op and _SHAPE[x.op] == _SHAPE[y.op]:
        return []
    return None


def _swap_same_kind(window: Word, table) -> Optional[Replacement]:
    x, mid, z = window
    if _is_off(x) and _is_off(z) and _kind(x) == _kind(z) and x.var > z.var:
        return [(1, (Letter(x.op, z.var), mid, Letter(z.op, x.var)))]
    return None


def _h_right(window: Word, table) -> Optional[Replacement]:
    x, mid, z = window
    if _is_h(x) and z.op == _e(-_kind(x)):
        return [(1, (z, mid, x))]
    return None


def _h_pair(window: Word, table) -> Optional[Replacement]:
    x, y = window
    if _is_h(x) and _is_h(y) and _kind(x) == -_kind(y):
        alpha = _kind(y)
        return [(1, (Letter(_e(alpha), y.var), Letter(_e(-alpha), x.var)))]
    return None


def _swap_e_he(window: Word, table) -> Optional[Replacement]:
    x, y = window
    if x.op in SIGNED and y.op == _he(_kind(x)) and x.var > y.var:
        return [(1, (Letter(x.op, y.var), Letter(y.op, x.var)))]
    return None


def _swap_he_e(window: Word, table) -> Optional[Replacement]:
    x, y = window
    if _is_h(x) and y.op == _e(_kind(x)) and x.var > y.var:
        return [(1, (Letter(x.op, y.var), Letter(y.op, x.var)))]
    return None


class DihedralRules(RuleSet):
    """Dn: letters e0, e1, e-1, he1, he-1 (he0 = -e0 on sl2).

    B = e0(x)^n u1 u2 with u1 an alternating e-chain ending in e_b and
    u2 = he_b e_b he_b ..., where all letters reading the same entry are sorted.
    """

    family = "dihedral"
    measure_description = (
        "(raw group letters, off-diagonal before e0 pairs, e0 inversions, he letters, "
        "letters to the right of he letters, inversions within the c-reading and within the b-reading letters)"
    )

    def build_rules(self) -> List[Rule]:
        return [
            Rule("lemma9.1", "he0(x) -> -e0(x)", 1, _h_on_diagonal),
            Rule("lemma9.2", "f(x2)*e0(x1) -> -e0(x1)*f(x2), f in {e_a, he_a}", 2, _anticommute),
            expansion_rule("lemma9.3", "h^s g^j(x) -> combination of e0, e1, e-1, he1, he-1", skip=("he0",)),
            Rule("lemma9.4", "e0(xj)*e0(xi) -> e0(xi)*e0(xj), i < j", 2, _sort_diagonal),
            Rule("lemma9.5", "f(x1)*f(x2) -> 0, f in {e_a, he_a}", 2, _square_zero),
            Rule("lemma9.6", "e_a(x1)*he_-a(x2) -> 0, he_a(x1)*e_-a(x2) -> 0", 2, _mixed_zero),
            Rule("lemma9.7", "f(xk)*y*g(xi) -> f(xi)*y*g(xk), i < k, f, g in {e_a, he_a}", 3, _swap_same_kind),
            Rule("lemma9.8", "he_-a(x3)*y*e_a(x1) -> e_a(x1)*y*he_-a(x3)", 3, _h_right),
            Rule("lemma9.9", "he_-a(x2)*he_a(x1) -> e_a(x1)*e_-a(x2)", 2, _h_pair),
            Rule("lemma9.10", "e_a(xk)*he_a(xi) -> e_a(xi)*he_a(xk), i < k", 2, _swap_e_he),
            Rule("lemma9.10^h", "he_a(xk)*e_a(xi) -> he_a(xi)*e_a(xk), i < k", 2, _swap_he_e),
        ]

    def measure(self, word: Word) -> tuple:
        h_weight = sum(len(word) - 1 - pos for pos, x in enumerate(word) if _is_h(x))
        return (
            self.raw_count(word),
            ordered_pairs(word, _is_off, lambda x: x.op == E0),
            inversions([x.var for x in word if x.op == E0]),
            sum(1 for x in word if _is_h(x)),
            h_weight,
            sum(inversions([x.var for x in word if _is_off(x) and _kind(x) == alpha]) for alpha in (1, -1)),
        )

    def normal_form(self, word: Word) -> bool:
        k = split_diagonal(word)
        if not is_sorted([x.var for x in word[:k]]):
            return False
        u = word[k:]
        if not all(_is_off(x) for x in u):
            return False
        return (
            self._no_mixed_h(u)
            and self._h_after_opposite(u)
            and self._adjacency(u)
            and self._sorted_per_letter(u)
            and self._sorted_adjacent_same_kind(u)
        )

    @staticmethod
    def _no_mixed_h(u: Word) -> bool:
        """he1 and he-1 do not occur together."""
        return not ({"he1", "he-1"} <= {x.op for x in u})

    @staticmethod
    def _h_after_opposite(u: Word) -> bool:
        """Every he_a comes after every e_-a."""
        for pos, x in enumerate(u):
            if _is_h(x) and any(y.op == _e(-_kind(x)) for y in u[pos + 1:]):
                return False
        return True

    @staticmethod
    def _adjacency(u: Word) -> bool:
        """e_a is followed only by e_-a or he_a; he_a only by e_a."""
        for x, y in zip(u, u[1:]):
            alpha = _kind(x)
            allowed = {_e(alpha)} if _is_h(x) else {_e(-alpha), _he(alpha)}
            if y.op not in allowed:
                return False
        return True

    @staticmethod
    def _sorted_per_letter(u: Word) -> bool:
        return all(is_sorted([x.var for x in u if x.op == op]) for op in OFF_DIAGONAL)

    @staticmethod
    def _sorted_adjacent_same_kind(u: Word) -> bool:
        """No adjacent f(xj)g(xi) with i < j and f, g reading the same entry."""
        return not any(_kind(x) == _kind(y) and x.var > y.var for x, y in zip(u, u[1:]))
