"""
Evaluation of G-polynomials at generic traceless matrices
"""

import logging
from typing import Dict, Union

from ..groups import GroupSpec, OperatorTable, operator_table
from ..pair import Mat2, generic_matrix
from .terms import GMonomial, GPolynomial, Letter

logger = logging.getLogger(__name__)

TableLike = Union[GroupSpec, OperatorTable]

# word prefixes kept between calls; cleared wholesale when full
MAX_CACHED_WORDS = 50000


def _table(source: TableLike) -> OperatorTable:
    if isinstance(source, OperatorTable):
        return source
    return operator_table(source)


class Evaluator:
    """Substitutes X_i = [[a_i, b_i], [c_i, -a_i]] for x_i and multiplies out.

    Distinct variables get distinct generic matrices and repeated variables share one.
    """

    def __init__(self, source: TableLike):
        self.table = _table(source)
        self.conductor = self.table.conductor
        self._letters: Dict[Letter, Mat2] = {}
        self._words: Dict[tuple, Mat2] = {}

    def letter(self, letter: Letter) -> Mat2:
        value = self._letters.get(letter)
        if value is None:
            op = self.table.realized(letter.op)
            value = op.apply_mat(generic_matrix(letter.var, self.conductor))
            self._letters[letter] = value
        return value

    def monomial(self, m: GMonomial) -> Mat2:
        word = m.word
        if not word:
            return Mat2.identity(self.conductor)
        value = self._words.get(word)
        if value is not None:
            return value
        if len(word) == 1:
            value = self.letter(word[0])
        else:
            value = self.monomial(GMonomial(word[:-1])) * self.letter(word[-1])
        if len(self._words) >= MAX_CACHED_WORDS:
            logger.debug("evaluation cache full, clearing %d words", len(self._words))
            self._words.clear()
        self._words[word] = value
        return value

    def __call__(self, f: GPolynomial) -> Mat2:
        result = Mat2.zero(self.conductor)
        for m, coef in f.items():
            result = result + self.monomial(m).scale(coef)
        return result


def evaluate(f: GPolynomial, source: TableLike) -> Mat2:
    """Image of f under x_i -> X_i."""
    return Evaluator(source)(f)


def is_weak_g_identity(f: GPolynomial, source: TableLike) -> bool:
    return evaluate(f, source).is_zero()
