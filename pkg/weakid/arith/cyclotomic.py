"""
Exact arithmetic in cyclotomic fields Q(zeta_N) = Q[x]/Phi_N(x)
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import List, Sequence, Tuple, Union

Rational = Union[int, Fraction]


def _trim(coeffs: List) -> List:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_divmod(num: Sequence, den: Sequence) -> Tuple[List, List]:
    """Long division of coefficient lists (lowest degree first)."""
    num = _trim([Fraction(c) for c in num])
    den = _trim([Fraction(c) for c in den])
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    if len(num) < len(den):
        return [], num
    quotient = [Fraction(0)] * (len(num) - len(den) + 1)
    lead = den[-1]
    while len(num) >= len(den):
        shift = len(num) - len(den)
        factor = num[-1] / lead
        quotient[shift] = factor
        for i, c in enumerate(den):
            num[shift + i] -= factor * c
        num.pop()
        _trim(num)
    return _trim(quotient), num


def _poly_mul(p: Sequence, q: Sequence) -> List:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x == 0:
            continue
        for j, y in enumerate(q):
            if y:
                out[i + j] += x * y
    return out


def _poly_sub(p: Sequence, q: Sequence) -> List:
    size = max(len(p), len(q))
    out = [(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(size)]
    return _trim(out)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Tuple[int, ...]:
    """Phi_n as integer coefficients, lowest degree first.

    Computed by dividing x^n - 1 by Phi_d for every proper divisor d of n.
    """
    if n < 1:
        raise ValueError(f"Cyclotomic index must be positive, got {n}")
    poly: List = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rest = _poly_divmod(poly, cyclotomic_polynomial(d))
            if rest:
                raise ArithmeticError(f"Phi_{d} does not divide x^{n} - 1")
    result = tuple(int(c) for c in poly)
    if any(Fraction(c) != int(c) for c in poly):
        raise ArithmeticError(f"Phi_{n} has non-integer coefficients")
    return result


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _reduce(coeffs: Sequence, conductor: int) -> Tuple[Fraction, ...]:
    """Reduce a coefficient list modulo the monic Phi_N, padded to length phi(N)."""
    modulus = cyclotomic_polynomial(conductor)
    degree = len(modulus) - 1
    work = [Fraction(c) for c in coeffs]
    for top in range(len(work) - 1, degree - 1, -1):
        factor = work[top]
        if factor:
            shift = top - degree
            for i, m in enumerate(modulus):
                if m:
                    work[shift + i] -= factor * m
    work = work[:degree]
    work.extend([Fraction(0)] * (degree - len(work)))
    return tuple(work)


class CycNum:
    """Element of Q(zeta_N), stored as its residue modulo Phi_N."""

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs: Sequence[Rational] = ()):
        if conductor < 1:
            raise ValueError(f"Conductor must be positive, got {conductor}")
        self.conductor = conductor
        self.coeffs = _reduce(coeffs, conductor)
        self._hash = None

    @classmethod
    def _raw(cls, conductor: int, coeffs: Tuple[Fraction, ...]) -> "CycNum":
        obj = cls.__new__(cls)
        obj.conductor = conductor
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, conductor: int) -> "CycNum":
        return cls(conductor)

    @classmethod
    def one(cls, conductor: int) -> "CycNum":
        return cls(conductor, [1])

    @classmethod
    def from_rational(cls, value: Rational, conductor: int) -> "CycNum":
        return cls(conductor, [Fraction(value)])

    @classmethod
    def zeta(cls, conductor: int) -> "CycNum":
        """The primitive root zeta_N, i.e. the class of x."""
        return cls(conductor, [0, 1])

    def _coerce(self, other) -> "CycNum":
        if isinstance(other, CycNum):
            if other.conductor != self.conductor:
                raise ValueError(
                    f"Conductor mismatch: {self.conductor} vs {other.conductor}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.from_rational(other, self.conductor)
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __add__(self, other) -> "CycNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycNum._raw(self.conductor, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycNum":
        return CycNum._raw(self.conductor, tuple(-x for x in self.coeffs))

    def __sub__(self, other) -> "CycNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycNum._raw(self.conductor, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other) -> "CycNum":
        return (-self) + other

    def __mul__(self, other) -> "CycNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_rational():
            scale = other.coeffs[0]
            return CycNum._raw(self.conductor, tuple(x * scale for x in self.coeffs))
        if self.is_rational():
            scale = self.coeffs[0]
            return CycNum._raw(self.conductor, tuple(y * scale for y in other.coeffs))
        return CycNum(self.conductor, _poly_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        """Multiplicative inverse via the extended Euclidean algorithm against Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        if self.is_rational():
            return CycNum.from_rational(1 / self.coeffs[0], self.conductor)
        # invariant: s_k * self == r_k (mod Phi_N)
        r0: List = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        r1: List = _trim(list(self.coeffs))
        s0: List = []
        s1: List = [Fraction(1)]
        while len(r1) > 1:
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        unit = r1[0]
        return CycNum(self.conductor, [c / unit for c in s1])

    def __truediv__(self, other) -> "CycNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> "CycNum":
        return self.inverse() * other

    def __pow__(self, exponent: int) -> "CycNum":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycNum.one(self.conductor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.conductor == other.conductor and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.conductor, self.coeffs))
        return self._hash

    def galois(self, k: int) -> "CycNum":
        """Image under the automorphism zeta_N -> zeta_N^k (gcd(k, N) = 1)."""
        if gcd(k, self.conductor) != 1:
            raise ValueError(f"{k} is not a unit modulo {self.conductor}")
        out = [Fraction(0)] * self.conductor
        for power, c in enumerate(self.coeffs):
            if c:
                out[(power * k) % self.conductor] += c
        return CycNum(self.conductor, out)

    def terms(self) -> List[Tuple[int, Fraction]]:
        """Non-zero (power, coefficient) pairs of the reduced representative."""
        return [(power, c) for power, c in enumerate(self.coeffs) if c]

    def format(self, symbol: str = "w") -> str:
        parts = []
        for power, c in self.terms():
            if power == 0:
                body = str(c)
            else:
                base = symbol if power == 1 else f"{symbol}^{power}"
                if c == 1:
                    body = base
                elif c == -1:
                    body = f"-{base}"
                else:
                    body = f"{c}*{base}"
            parts.append(body)
        if not parts:
            return "0"
        text = parts[0]
        for part in parts[1:]:
            text += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return text

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"CycNum({self.conductor}, {self.format()})"


def cyc_embed(n: int, k: int, conductor: int) -> CycNum:
    """zeta_n^k inside Q(zeta_N); requires n | N."""
    if n < 1 or conductor % n != 0:
        raise ValueError(f"Root order {n} does not divide conductor {conductor}")
    power = (k * (conductor // n)) % conductor
    coeffs = [0] * power + [1]
    return CycNum(conductor, coeffs)
