"""
Elements of the group algebra CG together with their action on sl2
"""

from dataclasses import dataclass
from typing import Dict, Tuple

from ..arith import CycNum
from .operators import Op3

# h^s g^j for the rotation groups Zn and Dn
GroupLabel = Tuple[int, int]


def label_name(label: GroupLabel) -> str:
    s, j = label
    if s == 0:
        return "id" if j == 0 else ("g" if j == 1 else f"g^{j}")
    return "h" if j == 0 else ("hg" if j == 1 else f"hg^{j}")


def label_product(x: GroupLabel, y: GroupLabel, n: int) -> GroupLabel:
    """(h^s g^j)(h^t g^k) = h^(s+t) g^((-1)^t j + k), using g h = h g^-1."""
    s, j = x
    t, k = y
    sign = -1 if t % 2 else 1
    return ((s + t) % 2, (sign * j + k) % n)


@dataclass(frozen=True)
class GAElem:
    """A named CG element: its formal combination of group labels and its realization on sl2.

    ``formal`` is empty for operators realized directly (the eps_ij matrix units and the
    generators of the groups A4, S4, A5).
    """
    name: str
    realized: Op3
    formal: Tuple[Tuple[GroupLabel, CycNum], ...] = ()
    n: int = 0

    @property
    def coefficients(self) -> Dict[GroupLabel, CycNum]:
        return dict(self.formal)

    def __mul__(self, other: "GAElem") -> "GAElem":
        formal: Dict[GroupLabel, CycNum] = {}
        if self.formal and other.formal and self.n == other.n and self.n > 0:
            for x, cx in self.formal:
                for y, cy in other.formal:
                    z = label_product(x, y, self.n)
                    formal[z] = formal.get(z, CycNum.zero(cx.conductor)) + cx * cy
        return GAElem(
            name=f"{self.name}{other.name}",
            realized=self.realized @ other.realized,
            formal=_freeze(formal),
            n=self.n,
        )

    def renamed(self, name: str) -> "GAElem":
        return GAElem(name=name, realized=self.realized, formal=self.formal, n=self.n)

    def conjugated(self, transform: Op3, inverse: Op3) -> "GAElem":
        return GAElem(name=self.name, realized=transform @ self.realized @ inverse, formal=self.formal, n=self.n)


def _freeze(formal: Dict[GroupLabel, CycNum]) -> Tuple[Tuple[GroupLabel, CycNum], ...]:
    return tuple(sorted((k, v) for k, v in formal.items() if not v.is_zero()))
