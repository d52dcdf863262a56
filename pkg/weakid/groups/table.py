"""
Operator universe of a group: name resolution, realizations and basis-letter expansion
"""

import re
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from ..arith import CycNum
from ..errors import UnknownOperatorError
from .actions import adjoint, epsilon, group_letter, h_idempotent, idempotent
from .algebra import GAElem, label_name
from .generators import generator_operators
from .irreducible import group_closure
from .operators import Op3
from .spec import GroupSpec

_GROUP_WORD = re.compile(r"^(h?)(g)?(?:\^(-?\d+))?$")
_IDEMPOTENT = re.compile(r"^(h?)e(-?\d+)$")
_EPSILON = re.compile(r"^eps([1-3])([1-3])$")
_GENERATOR_POWER = re.compile(r"^([gh])(?:\^(\d+))?$")

# (letter name, entry of the realizing Op3 that is its coefficient)
BasisLetter = Tuple[str, Tuple[int, int]]


def basis_letters(spec: GroupSpec) -> List[BasisLetter]:
    """Letters spanning the image of CG in End(sl2), in canonical order."""
    if spec.is_epsilon_group:
        return [(f"eps{i}{j}", (i - 1, j - 1)) for i in range(1, 4) for j in range(1, 4)]
    if spec.n == 1:
        return [("id", (0, 0))]
    if spec.n == 2:
        return [("e0", (0, 0)), ("e1", (1, 1))]
    letters = [("e0", (0, 0)), ("e1", (2, 2)), ("e-1", (1, 1))]
    if spec.is_dihedral:
        letters += [("he1", (1, 2)), ("he-1", (2, 1))]
    return letters


class OperatorTable:
    """Named operators of one group, optionally conjugated by Ad(B)."""

    def __init__(self, spec: GroupSpec, transform: Optional[Op3] = None):
        self.spec = spec
        self.conductor = spec.conductor
        self._transform = transform
        self._inverse = transform.inverse() if transform is not None else None
        self._cache: Dict[str, GAElem] = {}
        self._generators = generator_operators(spec)
        self.basis: List[BasisLetter] = basis_letters(spec)
        self._basis_names = [name for name, _ in self.basis]

    @property
    def is_conjugated(self) -> bool:
        return self._transform is not None

    @property
    def basis_names(self) -> List[str]:
        return list(self._basis_names)

    def canonical(self, name: str) -> str:
        return self._base(name).name

    def resolve(self, name: str) -> GAElem:
        element = self._base(name)
        if self._transform is not None:
            element = element.conjugated(self._transform, self._inverse)
        return element

    def realized(self, name: str) -> Op3:
        return self.resolve(name).realized

    def _base(self, name: str) -> GAElem:
        cached = self._cache.get(name)
        if cached is None:
            cached = self._build(name)
            self._cache[name] = cached
            self._cache[cached.name] = cached
        return cached

    def _build(self, name: str) -> GAElem:
        spec = self.spec
        if name == "id":
            if spec.has_rotation:
                return group_letter(spec, (0, 0))
            return GAElem(name="id", realized=Op3.identity(self.conductor))
        if spec.has_rotation:
            m = _GROUP_WORD.match(name)
            if m and (m.group(1) or m.group(2)) and not (m.group(3) and not m.group(2)):
                if m.group(1) and not spec.is_dihedral:
                    raise UnknownOperatorError(f"Operator '{name}' needs a dihedral group, not {spec.label}")
                power = int(m.group(3)) if m.group(3) else (1 if m.group(2) else 0)
                return group_letter(spec, (1 if m.group(1) else 0, power))
            m = _IDEMPOTENT.match(name)
            if m:
                if m.group(1):
                    if not spec.is_dihedral:
                        raise UnknownOperatorError(f"Operator '{name}' needs a dihedral group, not {spec.label}")
                    return h_idempotent(spec, int(m.group(2)))
                return idempotent(spec, int(m.group(2)))
        else:
            m = _EPSILON.match(name)
            if m:
                return GAElem(name=name, realized=epsilon(spec, int(m.group(1)), int(m.group(2))))
            m = _GENERATOR_POWER.match(name)
            if m:
                power = int(m.group(2)) if m.group(2) else 1
                op = self._generators[m.group(1)] ** power
                canonical = "id" if power == 0 else (m.group(1) if power == 1 else f"{m.group(1)}^{power}")
                return GAElem(name=canonical, realized=op)
        raise UnknownOperatorError(f"Unknown operator '{name}' for group {spec.label}")

    def is_basis_letter(self, name: str) -> bool:
        return name in self._basis_names

    def decompose(self, name: str) -> List[Tuple[str, CycNum]]:
        """Write the operator as a combination of basis letters; exact on sl2."""
        element = self._base(name)
        if element.name in self._basis_names:
            return [(element.name, CycNum.one(self.conductor))]
        op = element.realized
        parts = []
        rebuilt = Op3.zero(self.conductor)
        for letter, (i, j) in self.basis:
            coef = op.entry(i, j)
            if not coef.is_zero():
                parts.append((letter, coef))
                rebuilt = rebuilt + self._base(letter).realized.scale(coef)
        if rebuilt != op:
            raise ArithmeticError(f"Operator '{name}' is not in the span of the basis letters")
        return parts

    def group_elements(self) -> List[Op3]:
        """Realizations of every group element (conjugated if this table is)."""
        if self.spec.has_rotation:
            labels = [(s, j) for s in range(2 if self.spec.is_dihedral else 1) for j in range(self.spec.n)]
            names = [label_name(label) for label in labels]
            return [self.realized(name) for name in names]
        elements = group_closure(list(self._generators.values()))
        if self._transform is not None:
            elements = [self._transform @ x @ self._inverse for x in elements]
        return elements

    def conjugated(self, matrix: Sequence[Sequence]) -> "OperatorTable":
        transform = adjoint(matrix, self.conductor)
        if self._transform is not None:
            transform = transform @ self._transform
        return OperatorTable(self.spec, transform)

    def operator_names(self) -> List[str]:
        """Canonical names of the group letters, the idempotents e_i, he_i and the basis letters."""
        names = ["id"]
        if self.spec.has_rotation:
            names += [label_name((0, j)) for j in range(1, self.spec.n)]
            if self.spec.is_dihedral:
                names += [label_name((1, j)) for j in range(self.spec.n)]
            prefixes = ("e", "he") if self.spec.is_dihedral else ("e",)
            for prefix in prefixes:
                for i in range(self.spec.n):
                    name = self.canonical(f"{prefix}{i}")
                    if name not in names:
                        names.append(name)
        else:
            names += sorted(self._generators)
        return names + [n for n in self._basis_names if n not in names]


@lru_cache(maxsize=None)
def operator_table(spec: GroupSpec) -> OperatorTable:
    return OperatorTable(spec)


