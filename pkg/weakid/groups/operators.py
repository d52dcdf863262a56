"""
Linear operators on sl2 as 3x3 matrices over Q(zeta_N) in the basis v1, v2, v3
"""

from typing import Dict, Mapping, Sequence, Tuple

from ..arith import CycNum, MPoly
from ..pair import Mat2, SL2Coords

Row = Tuple[CycNum, CycNum, CycNum]

# coordinate positions: 0 -> a (v1 = e11 - e22), 1 -> b (v2 = e12), 2 -> c (v3 = e21)
COORD_NAMES = ("a", "b", "c")


class Op3:
    """Column j holds the coordinates of the image of v_{j+1}."""

    __slots__ = ("conductor", "rows", "_hash")

    def __init__(self, rows: Sequence[Sequence], conductor: int):
        self.conductor = conductor
        self.rows: Tuple[Row, ...] = tuple(
            tuple(x if isinstance(x, CycNum) else CycNum.from_rational(x, conductor) for x in row)
            for row in rows
        )
        if len(self.rows) != 3 or any(len(row) != 3 for row in self.rows):
            raise ValueError("Op3 requires a 3x3 matrix")
        self._hash = None

    @classmethod
    def identity(cls, conductor: int) -> "Op3":
        return cls([[1 if i == j else 0 for j in range(3)] for i in range(3)], conductor)

    @classmethod
    def zero(cls, conductor: int) -> "Op3":
        return cls([[0] * 3 for _ in range(3)], conductor)

    @classmethod
    def diagonal(cls, entries: Sequence, conductor: int) -> "Op3":
        return cls([[entries[i] if i == j else 0 for j in range(3)] for i in range(3)], conductor)

    @classmethod
    def unit(cls, i: int, j: int, conductor: int) -> "Op3":
        """Matrix unit E_ij (0-based): sends v_{j+1} to v_{i+1}, kills the other basis vectors."""
        return cls([[1 if (r, s) == (i, j) else 0 for s in range(3)] for r in range(3)], conductor)

    @classmethod
    def from_vector(cls, vector: Mapping[Tuple[int, int], CycNum], conductor: int) -> "Op3":
        zero = CycNum.zero(conductor)
        return cls([[vector.get((i, j), zero) for j in range(3)] for i in range(3)], conductor)

    def entry(self, i: int, j: int) -> CycNum:
        return self.rows[i][j]

    def as_vector(self) -> Dict[Tuple[int, int], CycNum]:
        return {(i, j): x for i, row in enumerate(self.rows) for j, x in enumerate(row) if not x.is_zero()}

    def __matmul__(self, other: "Op3") -> "Op3":
        """Composition: (self @ other)(v) = self(other(v))."""
        cols = list(zip(*other.rows))
        return Op3(
            [[sum((x * y for x, y in zip(row, col)), CycNum.zero(self.conductor)) for col in cols]
             for row in self.rows],
            self.conductor,
        )

    def __add__(self, other: "Op3") -> "Op3":
        return Op3([[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)], self.conductor)

    def __sub__(self, other: "Op3") -> "Op3":
        return Op3([[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)], self.conductor)

    def __neg__(self) -> "Op3":
        return Op3([[-x for x in row] for row in self.rows], self.conductor)

    def scale(self, factor) -> "Op3":
        return Op3([[x * factor for x in row] for row in self.rows], self.conductor)

    def __mul__(self, factor) -> "Op3":
        if isinstance(factor, Op3):
            return self @ factor
        return self.scale(factor)

    __rmul__ = scale

    def __pow__(self, k: int) -> "Op3":
        if k < 0:
            return self.inverse() ** (-k)
        result = Op3.identity(self.conductor)
        for _ in range(k):
            result = result @ self
        return result

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.rows for x in row)

    def is_identity(self) -> bool:
        return self == Op3.identity(self.conductor)

    def inverse(self) -> "Op3":
        """Gauss-Jordan inverse; raises ZeroDivisionError if singular."""
        n = 3
        zero = CycNum.zero(self.conductor)
        one = CycNum.one(self.conductor)
        work = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(self.rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if not work[r][col].is_zero()), None)
            if pivot is None:
                raise ZeroDivisionError("operator is singular")
            work[col], work[pivot] = work[pivot], work[col]
            inv = work[col][col].inverse()
            work[col] = [x * inv for x in work[col]]
            for r in range(n):
                if r != col and not work[r][col].is_zero():
                    factor = work[r][col]
                    work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
        return Op3([row[n:] for row in work], self.conductor)

    def apply(self, coords: SL2Coords) -> SL2Coords:
        src = coords.as_tuple()
        out = []
        for row in self.rows:
            acc = MPoly.zero(self.conductor)
            for x, p in zip(row, src):
                if not x.is_zero():
                    acc = acc + p.scale(x)
            out.append(acc)
        return SL2Coords(*out)

    def apply_mat(self, x: Mat2) -> Mat2:
        return self.apply(SL2Coords.from_mat2(x)).to_mat2()

    def galois(self, k: int) -> "Op3":
        return Op3([[x.galois(k) for x in row] for row in self.rows], self.conductor)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Op3):
            return NotImplemented
        return self.conductor == other.conductor and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.conductor, self.rows))
        return self._hash

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(x.format() for x in row) + "]" for row in self.rows) + "]"

    __repr__ = __str__
