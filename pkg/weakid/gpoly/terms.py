"""
Letters, G-monomials and G-polynomials of the free G-algebra
"""

import re
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from ..arith import CycNum

Multidegree = Tuple[int, ...]

_E_NAME = re.compile(r"^(h?)e(-?\d+)$")
_EPS_NAME = re.compile(r"^eps([1-3])([1-3])$")


def _index_rank(i: int) -> int:
    return {0: 0, 1: 1, -1: 2}.get(i, 3 + abs(i))


def op_sort_key(name: str) -> tuple:
    """Canonical operator order: e0 < e1 < e-1 < he.. < eps11 < ... < eps33 < raw letters."""
    m = _E_NAME.match(name)
    if m:
        return (1 if m.group(1) else 0, _index_rank(int(m.group(2))), "")
    m = _EPS_NAME.match(name)
    if m:
        return (2, 3 * int(m.group(1)) + int(m.group(2)), "")
    return (3, 0 if name == "id" else 1, name)


@dataclass(frozen=True)
class Letter:
    """An operator applied to the variable x_var."""
    op: str
    var: int

    def sort_key(self) -> tuple:
        return (op_sort_key(self.op), self.var)

    def __str__(self) -> str:
        if self.op == "id":
            return f"x{self.var}"
        return f"{self.op}(x{self.var})"


@dataclass(frozen=True)
class GMonomial:
    """A word of letters; the empty word is the unit."""
    word: Tuple[Letter, ...] = ()

    @classmethod
    def of(cls, *letters: Letter) -> "GMonomial":
        return cls(tuple(letters))

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.word)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return GMonomial(self.word[index])
        return self.word[index]

    def __add__(self, other: "GMonomial") -> "GMonomial":
        return GMonomial(self.word + other.word)

    @property
    def multidegree(self) -> Multidegree:
        return tuple(sorted(letter.var for letter in self.word))

    @property
    def variables(self) -> Tuple[int, ...]:
        return tuple(letter.var for letter in self.word)

    def sort_key(self) -> tuple:
        return (len(self.word), tuple(letter.sort_key() for letter in self.word))

    def __str__(self) -> str:
        if not self.word:
            return "1"
        return "*".join(str(letter) for letter in self.word)


Scalar = Union[int, CycNum]


class GPolynomial:
    """Finite combination of G-monomials with non-zero coefficients in Q(zeta_N)."""

    __slots__ = ("conductor", "_terms")

    def __init__(self, conductor: int, terms: Optional[Mapping[GMonomial, CycNum]] = None):
        self.conductor = conductor
        self._terms: Dict[GMonomial, CycNum] = {}
        for m, c in (terms or {}).items():
            self._accumulate(m, c)

    def _accumulate(self, m: GMonomial, c: CycNum) -> None:
        s = self._terms.get(m)
        s = c if s is None else s + c
        if s.is_zero():
            self._terms.pop(m, None)
        else:
            self._terms[m] = s

    @classmethod
    def zero(cls, conductor: int) -> "GPolynomial":
        return cls(conductor)

    @classmethod
    def constant(cls, value, conductor: int) -> "GPolynomial":
        if not isinstance(value, CycNum):
            value = CycNum.from_rational(value, conductor)
        return cls(conductor, {GMonomial(): value})

    @classmethod
    def monomial(cls, m: GMonomial, conductor: int, coef: Scalar = 1) -> "GPolynomial":
        if not isinstance(coef, CycNum):
            coef = CycNum.from_rational(coef, conductor)
        return cls(conductor, {m: coef})

    @classmethod
    def letter(cls, op: str, var: int, conductor: int) -> "GPolynomial":
        return cls.monomial(GMonomial((Letter(op, var),)), conductor)

    @classmethod
    def from_terms(cls, conductor: int, items: Iterable[Tuple[GMonomial, CycNum]]) -> "GPolynomial":
        poly = cls(conductor)
        for m, c in items:
            poly._accumulate(m, c)
        return poly

    @property
    def terms(self) -> Dict[GMonomial, CycNum]:
        return dict(self._terms)

    def items(self) -> List[Tuple[GMonomial, CycNum]]:
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def monomials(self) -> List[GMonomial]:
        return [m for m, _ in self.items()]

    def coefficient(self, m: GMonomial) -> CycNum:
        return self._terms.get(m, CycNum.zero(self.conductor))

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _lift(self, other) -> "GPolynomial":
        if isinstance(other, GPolynomial):
            if other.conductor != self.conductor:
                raise ValueError(f"Conductor mismatch: {self.conductor} vs {other.conductor}")
            return other
        return GPolynomial.constant(other, self.conductor)

    def __add__(self, other) -> "GPolynomial":
        other = self._lift(other)
        out = GPolynomial(self.conductor, self._terms)
        for m, c in other._terms.items():
            out._accumulate(m, c)
        return out

    __radd__ = __add__

    def __neg__(self) -> "GPolynomial":
        return GPolynomial(self.conductor, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "GPolynomial":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "GPolynomial":
        return self._lift(other) - self

    def scale(self, factor: Scalar) -> "GPolynomial":
        if not isinstance(factor, CycNum):
            factor = CycNum.from_rational(factor, self.conductor)
        return GPolynomial(self.conductor, {m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other) -> "GPolynomial":
        if not isinstance(other, GPolynomial):
            return self.scale(other)
        other = self._lift(other)
        out = GPolynomial(self.conductor)
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                out._accumulate(m1 + m2, c1 * c2)
        return out

    def __rmul__(self, other) -> "GPolynomial":
        return self.scale(other)

    def __pow__(self, k: int) -> "GPolynomial":
        if k < 0:
            raise ValueError("negative powers of G-polynomials are undefined")
        result = GPolynomial.constant(1, self.conductor)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, GPolynomial):
            return NotImplemented
        return self.conductor == other.conductor and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.conductor, frozenset(self._terms.items())))

    def multidegree_components(self) -> Dict[Multidegree, "GPolynomial"]:
        parts: Dict[Multidegree, GPolynomial] = {}
        for m, c in self._terms.items():
            parts.setdefault(m.multidegree, GPolynomial(self.conductor))._accumulate(m, c)
        return parts

    def letters(self) -> List[Letter]:
        return sorted({letter for m in self._terms for letter in m}, key=Letter.sort_key)

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"GPolynomial({self})"


def commutator(p: GPolynomial, q: GPolynomial) -> GPolynomial:
    return p * q - q * p


def _term_text(m: GMonomial, c: CycNum) -> str:
    if not m.word:
        text = c.format()
        return f"({text})" if len(c.terms()) > 1 else text
    if c == 1:
        return str(m)
    if c == -1:
        return f"-{m}"
    if len(c.terms()) == 1:
        return f"{c.format()}*{m}"
    return f"({c.format()})*{m}"


def format_polynomial(f: GPolynomial) -> str:
    """Canonical text that the parser reads back to the same polynomial."""
    parts = [_term_text(m, c) for m, c in f.items()]
    if not parts:
        return "0"
    text = parts[0]
    for part in parts[1:]:
        text += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
    return text
