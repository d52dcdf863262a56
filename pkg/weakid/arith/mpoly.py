"""
Sparse commutative polynomials over Q(zeta_N) in the variables a_i, b_i, c_i
"""

from fractions import Fraction
from typing import Dict, Iterator, Mapping, Tuple, Union

from .cyclotomic import CycNum

# (kind, index) with kind 0, 1, 2 for a, b, c; tuple order gives a1 < a2 < ... < b1 < ... < c1 < ...
Var = Tuple[int, int]
Monomial = Tuple[Tuple[Var, int], ...]

VAR_NAMES = ("a", "b", "c")

Scalar = Union[int, Fraction, CycNum]


def monomial_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    while i < len(m1) and j < len(m2):
        v1, e1 = m1[i]
        v2, e2 = m2[j]
        if v1 == v2:
            out.append((v1, e1 + e2))
            i += 1
            j += 1
        elif v1 < v2:
            out.append(m1[i])
            i += 1
        else:
            out.append(m2[j])
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def monomial_str(m: Monomial) -> str:
    if not m:
        return "1"
    parts = []
    for (kind, index), exp in m:
        name = f"{VAR_NAMES[kind]}{index}"
        parts.append(name if exp == 1 else f"{name}^{exp}")
    return "*".join(parts)


class MPoly:
    """Immutable sparse polynomial; zero coefficients are never stored."""

    __slots__ = ("conductor", "_terms", "_hash")

    def __init__(self, conductor: int, terms: Mapping[Monomial, CycNum] = None):
        self.conductor = conductor
        self._terms: Dict[Monomial, CycNum] = {
            m: c for m, c in (terms or {}).items() if not c.is_zero()
        }
        self._hash = None

    @classmethod
    def _raw(cls, conductor: int, terms: Dict[Monomial, CycNum]) -> "MPoly":
        obj = cls.__new__(cls)
        obj.conductor = conductor
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, conductor: int) -> "MPoly":
        return cls._raw(conductor, {})

    @classmethod
    def constant(cls, value: Scalar, conductor: int) -> "MPoly":
        if not isinstance(value, CycNum):
            value = CycNum.from_rational(value, conductor)
        return cls(conductor, {(): value})

    @classmethod
    def variable(cls, kind: int, index: int, conductor: int) -> "MPoly":
        if kind not in (0, 1, 2) or index < 1:
            raise ValueError(f"Invalid variable ({kind}, {index})")
        return cls._raw(conductor, {(((kind, index), 1),): CycNum.one(conductor)})

    @property
    def terms(self) -> Mapping[Monomial, CycNum]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, CycNum]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check(self, other: "MPoly") -> None:
        if other.conductor != self.conductor:
            raise ValueError(f"Conductor mismatch: {self.conductor} vs {other.conductor}")

    def __add__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            other = MPoly.constant(other, self.conductor)
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return MPoly._raw(self.conductor, out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._raw(self.conductor, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            other = MPoly.constant(other, self.conductor)
        return self + (-other)

    def __rsub__(self, other) -> "MPoly":
        return (-self) + other

    def scale(self, factor: Scalar) -> "MPoly":
        if not isinstance(factor, CycNum):
            factor = CycNum.from_rational(factor, self.conductor)
        if factor.is_zero():
            return MPoly.zero(self.conductor)
        return MPoly._raw(self.conductor, {m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            return self.scale(other)
        self._check(other)
        out: Dict[Monomial, CycNum] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = monomial_mul(m1, m2)
                p = c1 * c2
                s = out.get(m)
                out[m] = p if s is None else s + p
        return MPoly(self.conductor, out)

    def __rmul__(self, other) -> "MPoly":
        return self.scale(other)

    def __pow__(self, exponent: int) -> "MPoly":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = MPoly.constant(1, self.conductor)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, CycNum)):
            other = MPoly.constant(other, self.conductor)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.conductor == other.conductor and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.conductor, frozenset(self._terms.items())))
        return self._hash

    def galois(self, k: int) -> "MPoly":
        return MPoly._raw(self.conductor, {m: c.galois(k) for m, c in self._terms.items()})

    def monomials(self) -> list:
        return sorted(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m in self.monomials():
            c = self._terms[m]
            mono = monomial_str(m)
            if not m:
                parts.append(c.format())
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            elif len(c.terms()) == 1:
                parts.append(f"{c.format()}*{mono}")
            else:
                parts.append(f"({c.format()})*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MPoly({self})"


def a(i: int, conductor: int = 1) -> MPoly:
    return MPoly.variable(0, i, conductor)


def b(i: int, conductor: int = 1) -> MPoly:
    return MPoly.variable(1, i, conductor)


def c(i: int, conductor: int = 1) -> MPoly:
    return MPoly.variable(2, i, conductor)
