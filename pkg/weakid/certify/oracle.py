"""
Brute-force dimension of a multidegree component of the relatively free pair

Works from the realized group elements alone and never consults the rewrite rules.
"""

import logging
from collections import Counter
from itertools import permutations, product
from math import comb
from typing import Dict, Iterable, List, Optional, Tuple

from ..arith import RowReducer
from ..errors import OracleBudgetExceeded
from ..groups import GroupSpec, Op3, OperatorTable, operator_table
from ..pair import Mat2, generic_matrix
from .linalg import EvalVector

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_BUDGET = 5


def spanning_operators(table: OperatorTable) -> List[Op3]:
    """Reduced echelon basis of the span of the realized group elements.

    Words over it span the same space as words over the whole operator alphabet. The
    reduced basis has few nonzero entries, so letter images stay short.
    """
    reducer = RowReducer(table.conductor)
    for op in table.group_elements():
        reducer.add(op.as_vector())
    ops = [Op3.from_vector(row, table.conductor) for row in reducer.reduced_rows()]
    logger.debug("%s: group elements span %d dimensions", table.spec.label, len(ops))
    return ops


def ambient_dimension(variables: Iterable[int]) -> int:
    """Coordinates available to a 2x2 evaluation that is multilinear of the given multidegree."""
    total = 4
    for count in Counter(variables).values():
        total *= comb(count + 2, 2)
    return total


def quotient_dimension_oracle(
    spec: GroupSpec,
    multidegree: Iterable[int],
    budget: int = DEFAULT_ORACLE_BUDGET,
    table: Optional[OperatorTable] = None,
) -> int:
    """Rank of the evaluations of every word of the multidegree."""
    variables = tuple(sorted(multidegree))
    if len(variables) > budget:
        raise OracleBudgetExceeded(
            f"multidegree of total degree {len(variables)} exceeds the oracle budget {budget}"
        )
    if not variables:
        return 1
    table = table or operator_table(spec)
    conductor = table.conductor
    ops = spanning_operators(table)
    ceiling = ambient_dimension(variables)
    letters: Dict[Tuple[int, int], Mat2] = {}

    def letter(k: int, var: int) -> Mat2:
        key = (k, var)
        if key not in letters:
            letters[key] = ops[k].apply_mat(generic_matrix(var, conductor))
        return letters[key]

    reducer = RowReducer(conductor)
    prefixes: Dict[Tuple[Tuple[int, int], ...], Mat2] = {}
    for order in sorted(set(permutations(variables))):
        for choice in product(range(len(ops)), repeat=len(order)):
            word = tuple(zip(choice, order))
            value = prefixes.get(word[:-1]) if len(word) > 1 else None
            if value is None:
                value = Mat2.identity(conductor)
                for k, var in word[:-1]:
                    value = value * letter(k, var)
                if len(word) > 1:
                    prefixes[word[:-1]] = value
            value = value * letter(*word[-1])
            reducer.add(EvalVector.from_mat2(value).coords)
            if reducer.rank == ceiling:
                return ceiling
    return reducer.rank
