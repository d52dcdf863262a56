"""
Rule set for A4, S4 and A5, written in the matrix units eps_ij of End(sl2)
"""

import re
from typing import List, Optional, Tuple

from ..gpoly.terms import Letter
from .base import Replacement, Rule, RuleSet, Word, expansion_rule, inversions, is_sorted, ordered_pairs

_EPS = re.compile(r"^eps([1-3])([1-3])$")


def eps(i: int, j: int) -> str:
    return f"eps{i}{j}"


def indices(letter: Letter) -> Tuple[int, int]:
    m = _EPS.match(letter.op)
    if not m:
        raise ValueError(f"'{letter.op}' is not an eps letter")
    return int(m.group(1)), int(m.group(2))


def row(letter: Letter) -> int:
    m = _EPS.match(letter.op)
    return int(m.group(1)) if m else 0


def label(letter: Letter) -> Tuple[int, int]:
    """(column, variable): the entry of X_var the letter reads."""
    return indices(letter)[1], letter.var


def _upper(letter: Letter) -> bool:
    return row(letter) >= 2


def _first(letter: Letter) -> bool:
    return row(letter) == 1


def _sort_first_row(window: Word, table) -> Optional[Replacement]:
    x, y = window
    if _first(x) and _first(y) and label(x) > label(y):
        return [(1, (y, x))]
    return None


def _anticommute(window: Word, table) -> Optional[Replacement]:
    x, y = window
    if _upper(x) and _first(y):
        return [(-1, (y, x))]
    return None


def _row_zero(window: Word, table) -> Optional[Replacement]:
    x, y = window
    if _upper(x) and row(x) == row(y):
        return []
    return None


def _three_two(window: Word, table) -> Optional[Replacement]:
    x, y = window
    if row(x) == 3 and row(y) == 2:
        alpha, beta = indices(x)[1], indices(y)[1]
        return [
            (1, (Letter(eps(1, alpha), x.var), Letter(eps(1, beta), y.var))),
            (-1, (y, x)),
        ]
    return None


def _swap_labels(x: Letter, y: Letter) -> Tuple[Letter, Letter]:
    """Exchange the (column, variable) labels of two letters, keeping their rows."""
    (ri, ci), (rj, cj) = indices(x), indices(y)
    return Letter(eps(ri, cj), y.var), Letter(eps(rj, ci), x.var)


def _first_before_upper(window: Word, table) -> Optional[Replacement]:
    x, y = window
    if _first(x) and _upper(y) and label(x) > label(y):
        a, b = _swap_labels(x, y)
        return [(1, (a, b))]
    return None


def _sort_pair(window: Word, table) -> Optional[Replacement]:
    x, y = window
    if row(x) == 2 and row(y) == 3 and label(x) > label(y):
        a, b = _swap_labels(x, y)
        return [(1, (a, b))]
    return None


class EpsilonRules(RuleSet):
    """A4, S4, A5: letters eps_ij, i, j in 1..3.

    B = u1 u2 with u1 the eps_1s letters sorted by (s, variable) and
    u2 in {1, eps_2i, eps_3j, eps_2i eps_3j}, every u2 label at least every u1 label,
    and (i, x_a) <= (j, x_b) in eps_2i(x_a) eps_3j(x_b).
    """

    family = "epsilon"
    measure_description = (
        "(raw group letters, row 2/3 letters, row 2/3 before row 1 pairs, eps_3 before eps_2 pairs, "
        "inversions of the (column, variable) labels)"
    )

    def build_rules(self) -> List[Rule]:
        return [
            expansion_rule("lemma13.1", "x -> eps11(x) + eps22(x) + eps33(x), g(x) -> sum of eps_ij(x)"),
            Rule("lemma13.2", "eps1b(x2)*eps1a(x1) -> eps1a(x1)*eps1b(x2) when (a, x1) < (b, x2)", 2, _sort_first_row),
            Rule("lemma13.3", "eps_ij(x2)*eps1a(x1) -> -eps1a(x1)*eps_ij(x2), i = 2, 3", 2, _anticommute),
            Rule("lemma13.5", "eps_ia(x1)*eps_ib(x2) -> 0, i = 2, 3", 2, _row_zero),
            Rule(
                "lemma13.6",
                "eps3a(x1)*eps2b(x2) -> eps1a(x1)*eps1b(x2) - eps2b(x2)*eps3a(x1) (with lemma13.5 this also reduces eps_ia*eps_jb*eps_ic)",
                2,
                _three_two,
            ),
            Rule("lemma13.7", "eps1s(xp)*eps_ij(xq) -> eps1j(xq)*eps_is(xp) when (j, q) < (s, p)", 2, _first_before_upper),
            Rule("lemma13.8", "eps2i(xp)*eps3j(xq) -> eps2j(xq)*eps3i(xp) when (j, q) < (i, p)", 2, _sort_pair),
        ]

    def measure(self, word: Word) -> tuple:
        letters = [x for x in word if not self.is_raw(x)]
        return (
            self.raw_count(word),
            sum(1 for x in letters if _upper(x)),
            ordered_pairs(word, _upper, _first),
            ordered_pairs(word, lambda x: row(x) == 3, lambda x: row(x) == 2),
            inversions([label(x) for x in letters]),
        )

    def normal_form(self, word: Word) -> bool:
        k = 0
        while k < len(word) and _first(word[k]):
            k += 1
        u1, u2 = word[:k], word[k:]
        labels = [label(x) for x in u1]
        if not is_sorted(labels):
            return False
        if len(u2) > 2 or not all(_upper(x) for x in u2):
            return False
        if len(u2) == 2:
            if row(u2[0]) != 2 or row(u2[1]) != 3 or label(u2[0]) > label(u2[1]):
                return False
        top = labels[-1] if labels else None
        return top is None or all(top <= label(x) for x in u2)
