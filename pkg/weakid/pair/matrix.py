"""
2x2 matrices over MPoly and the generic traceless matrices X_i
"""

from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

from ..arith import MPoly
from ..arith.mpoly import Scalar


class Mat2:
    """Immutable 2x2 matrix with MPoly entries."""

    __slots__ = ("m11", "m12", "m21", "m22")

    def __init__(self, m11: MPoly, m12: MPoly, m21: MPoly, m22: MPoly):
        self.m11 = m11
        self.m12 = m12
        self.m21 = m21
        self.m22 = m22

    @property
    def conductor(self) -> int:
        return self.m11.conductor

    @classmethod
    def zero(cls, conductor: int) -> "Mat2":
        z = MPoly.zero(conductor)
        return cls(z, z, z, z)

    @classmethod
    def identity(cls, conductor: int) -> "Mat2":
        z = MPoly.zero(conductor)
        one = MPoly.constant(1, conductor)
        return cls(one, z, z, one)

    @classmethod
    def from_constants(cls, rows: Sequence[Sequence[Scalar]], conductor: int) -> "Mat2":
        (p, q), (r, s) = rows
        return cls(*(MPoly.constant(x, conductor) for x in (p, q, r, s)))

    @classmethod
    def unit(cls, i: int, j: int, conductor: int) -> "Mat2":
        """Matrix unit e_ij (1-based)."""
        rows = [[0, 0], [0, 0]]
        rows[i - 1][j - 1] = 1
        return cls.from_constants(rows, conductor)

    def entries(self) -> Tuple[MPoly, MPoly, MPoly, MPoly]:
        return (self.m11, self.m12, self.m21, self.m22)

    def __iter__(self) -> Iterator[MPoly]:
        return iter(self.entries())

    def __add__(self, other: "Mat2") -> "Mat2":
        return Mat2(*(x + y for x, y in zip(self.entries(), other.entries())))

    def __sub__(self, other: "Mat2") -> "Mat2":
        return Mat2(*(x - y for x, y in zip(self.entries(), other.entries())))

    def __neg__(self) -> "Mat2":
        return Mat2(*(-x for x in self.entries()))

    def scale(self, factor) -> "Mat2":
        return Mat2(*(x * factor for x in self.entries()))

    def __mul__(self, other) -> "Mat2":
        if isinstance(other, Mat2):
            return mat_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> "Mat2":
        return self.scale(other)

    def trace(self) -> MPoly:
        return self.m11 + self.m22

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.entries())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self) -> int:
        return hash(self.entries())

    def galois(self, k: int) -> "Mat2":
        return Mat2(*(x.galois(k) for x in self.entries()))

    def __str__(self) -> str:
        return f"[[{self.m11}, {self.m12}], [{self.m21}, {self.m22}]]"

    __repr__ = __str__


@dataclass(frozen=True)
class SL2Coords:
    """Coordinates (a, b, c) in the basis v1 = e11 - e22, v2 = e12, v3 = e21."""
    a: MPoly
    b: MPoly
    c: MPoly

    def as_tuple(self) -> Tuple[MPoly, MPoly, MPoly]:
        return (self.a, self.b, self.c)

    def to_mat2(self) -> Mat2:
        return Mat2(self.a, self.b, self.c, -self.a)

    @classmethod
    def from_mat2(cls, x: Mat2) -> "SL2Coords":
        if not x.trace().is_zero():
            raise ValueError(f"Matrix is not traceless: trace = {x.trace()}")
        return cls(x.m11, x.m12, x.m21)


def generic_matrix(i: int, conductor: int = 1) -> Mat2:
    """X_i = [[a_i, b_i], [c_i, -a_i]]."""
    if i < 1:
        raise ValueError(f"Variable index must be positive, got {i}")
    a = MPoly.variable(0, i, conductor)
    return Mat2(a, MPoly.variable(1, i, conductor), MPoly.variable(2, i, conductor), -a)


def mat_mul(x: Mat2, y: Mat2) -> Mat2:
    return Mat2(
        x.m11 * y.m11 + x.m12 * y.m21,
        x.m11 * y.m12 + x.m12 * y.m22,
        x.m21 * y.m11 + x.m22 * y.m21,
        x.m21 * y.m12 + x.m22 * y.m22,
    )


def commutator(x: Mat2, y: Mat2) -> Mat2:
    return mat_mul(x, y) - mat_mul(y, x)


def is_zero_mat(x: Mat2) -> bool:
    return x.is_zero()
