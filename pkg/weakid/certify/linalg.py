"""
Evaluation vectors and exact independence checks
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Hashable, List, Optional, Sequence, Tuple, Union

from ..arith import CycNum, Monomial, RowReducer
from ..gpoly import Evaluator, GMonomial
from ..gpoly.evaluate import TableLike
from ..pair import Mat2

# (entry index 1..4 for m11, m12, m21, m22; monomial in the a_i, b_i, c_i)
EvalKey = Tuple[int, Monomial]

ENTRY_POSITIONS = {1: (1, 1), 2: (1, 2), 3: (2, 1), 4: (2, 2)}


class EvalVector:
    """Coordinates of a Mat2 evaluation in the monomial basis of each entry."""

    __slots__ = ("conductor", "coords")

    def __init__(self, conductor: int, coords: Dict[EvalKey, CycNum]):
        self.conductor = conductor
        self.coords = {k: v for k, v in coords.items() if not v.is_zero()}

    @classmethod
    def from_mat2(cls, x: Mat2) -> "EvalVector":
        coords: Dict[EvalKey, CycNum] = {}
        for index, entry in enumerate(x.entries(), start=1):
            for m, c in entry.items():
                coords[(index, m)] = c
        return cls(x.conductor, coords)

    def support(self) -> FrozenSet[EvalKey]:
        return frozenset(self.coords)

    def entries(self) -> List[int]:
        return sorted({index for index, _ in self.coords})

    def is_zero(self) -> bool:
        return not self.coords

    def __add__(self, other: "EvalVector") -> "EvalVector":
        out = dict(self.coords)
        for k, v in other.coords.items():
            out[k] = out[k] + v if k in out else v
        return EvalVector(self.conductor, out)

    def scale(self, factor) -> "EvalVector":
        return EvalVector(self.conductor, {k: v * factor for k, v in self.coords.items()})

    def galois(self, k: int) -> "EvalVector":
        return EvalVector(self.conductor, {key: v.galois(k) for key, v in self.coords.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, EvalVector):
            return NotImplemented
        return self.conductor == other.conductor and self.coords == other.coords

    def __len__(self) -> int:
        return len(self.coords)

    def __repr__(self) -> str:
        return f"EvalVector({len(self.coords)} coordinates)"


@dataclass
class IndependenceResult:
    rank: int
    count: int
    # a kernel vector over the input monomials when they are dependent
    dependent_subset: Optional[List[Tuple[GMonomial, CycNum]]] = None

    @property
    def independent(self) -> bool:
        return self.rank == self.count


def independence_check(monomials: Sequence[GMonomial], source: Union[Evaluator, TableLike]) -> IndependenceResult:
    """Exact rank of the evaluations of ``monomials`` over Q(zeta_N).

    ``source`` is a group spec, an operator table or an evaluator whose cache is reused.
    """
    evaluator = source if isinstance(source, Evaluator) else Evaluator(source)
    reducer = RowReducer(evaluator.conductor, track=True)
    witness = None
    for index, m in enumerate(monomials):
        vector = EvalVector.from_mat2(evaluator.monomial(m))
        combination = reducer.add(vector.coords, label=index)
        if combination is not None and witness is None:
            witness = [(monomials[i], c) for i, c in sorted(combination.items()) if not c.is_zero()]
    return IndependenceResult(rank=reducer.rank, count=len(monomials), dependent_subset=witness)


def distinct_supports(vectors: Sequence[EvalVector]) -> bool:
    """Whether the vectors have pairwise different supports."""
    seen: set = set()
    for v in vectors:
        key: Hashable = v.support()
        if key in seen:
            return False
        seen.add(key)
    return True
