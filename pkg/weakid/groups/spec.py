"""
Group specifications: which finite subgroup of PGL2 acts, and over which cyclotomic field
"""

import re
from enum import Enum
from math import gcd
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..arith import CycNum, cyc_embed
from ..errors import GroupSpecError


class GroupKind(str, Enum):
    CYCLIC = "Zn"
    DIHEDRAL = "Dn"
    A4 = "A4"
    S4 = "S4"
    A5 = "A5"


# lcm of the root-of-unity orders used by the shipped generator matrices
EPSILON_CONDUCTORS = {GroupKind.A4: 4, GroupKind.S4: 8, GroupKind.A5: 20}
EPSILON_ORDERS = {GroupKind.A4: 12, GroupKind.S4: 24, GroupKind.A5: 60}

_SPEC_RE = re.compile(r"^\s*(Zn|Dn)\s*:\s*(\d+)\s*$|^\s*(A4|S4|A5)\s*$")


class GroupSpec(BaseModel):
    """A group together with the conductor N of the field Q(zeta_N) it is realized over"""
    model_config = ConfigDict(frozen=True)

    kind: GroupKind = Field(description="Group family")
    n: int = Field(default=0, ge=0, description="Order parameter for Zn/Dn, 0 for the other groups")
    conductor: int = Field(default=0, ge=0, description="Conductor N; 0 selects the natural one")
    root_power: int = Field(default=1, description="omega = zeta_n^root_power")

    @model_validator(mode="after")
    def _check(self) -> "GroupSpec":
        if self.kind == GroupKind.CYCLIC and self.n < 1:
            raise GroupSpecError("Zn requires n >= 1")
        if self.kind == GroupKind.DIHEDRAL and self.n < 3:
            raise GroupSpecError(f"Dn requires n >= 3, got n = {self.n}")
        if self.is_epsilon_group and self.n != 0:
            raise GroupSpecError(f"{self.kind.value} takes no order parameter")
        natural = self.natural_conductor
        if self.conductor == 0:
            object.__setattr__(self, "conductor", natural)
        elif self.conductor % natural != 0:
            raise GroupSpecError(
                f"Conductor {self.conductor} is not a multiple of {natural} required by {self.label}"
            )
        if self.has_rotation and gcd(self.root_power, self.n) != 1:
            raise GroupSpecError(f"root power {self.root_power} is not a unit modulo {self.n}")
        return self

    @classmethod
    def parse(cls, text: str, conductor: Optional[int] = None, root_power: int = 1) -> "GroupSpec":
        """Parse "Zn:<n>", "Dn:<n>", "A4", "S4" or "A5"."""
        match = _SPEC_RE.match(text or "")
        if not match:
            raise GroupSpecError(
                f"Unknown group '{text}'. Available: Zn:<n>, Dn:<n>, A4, S4, A5"
            )
        if match.group(1):
            kind, n = GroupKind(match.group(1)), int(match.group(2))
        else:
            kind, n = GroupKind(match.group(3)), 0
        try:
            return cls(kind=kind, n=n, conductor=conductor or 0, root_power=root_power)
        except GroupSpecError:
            raise
        except ValueError as e:
            raise GroupSpecError(str(e)) from e

    @property
    def natural_conductor(self) -> int:
        if self.is_epsilon_group:
            return EPSILON_CONDUCTORS[self.kind]
        return self.n

    @property
    def is_cyclic(self) -> bool:
        return self.kind == GroupKind.CYCLIC

    @property
    def is_dihedral(self) -> bool:
        return self.kind == GroupKind.DIHEDRAL

    @property
    def has_rotation(self) -> bool:
        """Zn and Dn carry the rotation g = diag(1, omega^-1, omega)."""
        return self.kind in (GroupKind.CYCLIC, GroupKind.DIHEDRAL)

    @property
    def is_epsilon_group(self) -> bool:
        return self.kind in EPSILON_CONDUCTORS

    @property
    def order(self) -> int:
        if self.is_cyclic:
            return self.n
        if self.is_dihedral:
            return 2 * self.n
        return EPSILON_ORDERS[self.kind]

    @property
    def label(self) -> str:
        if self.has_rotation:
            return f"{self.kind.value}:{self.n}"
        return self.kind.value

    def omega(self) -> CycNum:
        """The primitive n-th root of unity used by the rotation."""
        if not self.has_rotation:
            raise GroupSpecError(f"{self.label} has no distinguished rotation")
        return cyc_embed(self.n, self.root_power, self.conductor)

    def lift(self, conductor: int) -> "GroupSpec":
        """Same group over a larger cyclotomic field."""
        return GroupSpec(kind=self.kind, n=self.n, conductor=conductor, root_power=self.root_power)

    def __str__(self) -> str:
        return self.label
