"""
Finite group closure and the irreducibility test for the action on sl2
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence

from ..arith import RowReducer
from ..errors import GroupClosureError
from .operators import Op3

logger = logging.getLogger(__name__)

MAX_GROUP_ORDER = 120


@dataclass(frozen=True)
class IrreducibilityReport:
    """Dimensions of the unital algebra generated by the operators and of its commutant"""
    algebra_dim: int
    commutant_dim: int

    @property
    def irreducible(self) -> bool:
        return self.commutant_dim == 1


def group_closure(generators: Sequence[Op3], limit: int = MAX_GROUP_ORDER) -> List[Op3]:
    """All products of the generators; the identity comes first."""
    if not generators:
        raise ValueError("group_closure needs at least one generator")
    identity = Op3.identity(generators[0].conductor)
    elements = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        next_frontier = []
        for x in frontier:
            for gen in generators:
                y = gen @ x
                if y not in seen:
                    seen.add(y)
                    elements.append(y)
                    next_frontier.append(y)
                    if len(elements) > limit:
                        raise GroupClosureError(f"group closure exceeded {limit} elements; generators are not of finite order")
        frontier = next_frontier
    logger.debug("closure of %d generators has %d elements", len(generators), len(elements))
    return elements


def _key(i: int, j: int) -> int:
    return 3 * i + j


def check_irreducible(ops: Sequence[Op3]) -> IrreducibilityReport:
    """Unital algebra spanned by products of ``ops`` and the dimension of its commutant."""
    if not ops:
        raise ValueError("check_irreducible needs a non-empty operator list")
    conductor = ops[0].conductor
    reducer = RowReducer(conductor)
    basis: List[Op3] = []

    def offer(op: Op3) -> bool:
        row = {_key(i, j): x for (i, j), x in op.as_vector().items()}
        if reducer.add(row) is None:
            basis.append(op)
            return True
        return False

    offer(Op3.identity(conductor))
    for op in ops:
        offer(op)
    grew = True
    while grew:
        grew = False
        for x in list(basis):
            for op in ops:
                if offer(op @ x):
                    grew = True

    # commutant: unknowns X_kl, equations (A X - X A)_ij = 0 for every generator A
    equations = RowReducer(conductor)
    for op in ops:
        for i in range(3):
            for j in range(3):
                row = {}
                for k in range(3):
                    a_ik = op.entry(i, k)
                    if not a_ik.is_zero():
                        key = _key(k, j)
                        row[key] = row.get(key, a_ik * 0) + a_ik
                    a_kj = op.entry(k, j)
                    if not a_kj.is_zero():
                        key = _key(i, k)
                        row[key] = row.get(key, a_kj * 0) - a_kj
                equations.add(row)
    return IrreducibilityReport(algebra_dim=reducer.rank, commutant_dim=9 - equations.rank)
