"""
Shipped generator matrices in GL2 whose projective images generate each group
"""

from typing import Callable, Dict, List, Tuple

from ..arith import cyc_embed
from .actions import Matrix2, adjoint_of_pgl2, as_matrix2
from .operators import Op3
from .spec import GroupKind, GroupSpec

NamedMatrix = Tuple[str, Matrix2]


def _rotation(spec: GroupSpec) -> List[NamedMatrix]:
    gens = [("g", as_matrix2([[1, 0], [0, spec.omega()]], spec.conductor))]
    if spec.is_dihedral:
        gens.append(("h", as_matrix2([[0, 1], [1, 0]], spec.conductor)))
    return gens


def _tetrahedral_rotation(conductor: int) -> Matrix2:
    """Twice the unit quaternion (1 + i + j + k)/2; order 3 in PGL2."""
    i = cyc_embed(4, 1, conductor)
    return as_matrix2([[1 + i, 1 + i], [i - 1, 1 - i]], conductor)


def _a4(spec: GroupSpec) -> List[NamedMatrix]:
    i = cyc_embed(4, 1, spec.conductor)
    return [
        ("g", _tetrahedral_rotation(spec.conductor)),
        ("h", as_matrix2([[i, 0], [0, -i]], spec.conductor)),
    ]


def _s4(spec: GroupSpec) -> List[NamedMatrix]:
    z8 = cyc_embed(8, 1, spec.conductor)
    return [
        ("g", _tetrahedral_rotation(spec.conductor)),
        ("h", as_matrix2([[z8, 0], [0, z8.inverse()]], spec.conductor)),
    ]


def _a5(spec: GroupSpec) -> List[NamedMatrix]:
    n = spec.conductor
    i = cyc_embed(4, 1, n)
    z5 = cyc_embed(5, 1, n)
    phi = 1 + z5 + z5.inverse()
    phi_inv = phi - 1
    # twice the icosian (phi + phi^-1 i + j)/2; order 5 in PGL2
    s = as_matrix2([[phi + phi_inv * i, 1], [-1, phi - phi_inv * i]], n)
    return [("g", _tetrahedral_rotation(n)), ("h", s)]


GENERATORS: Dict[GroupKind, Callable[[GroupSpec], List[NamedMatrix]]] = {
    GroupKind.CYCLIC: _rotation,
    GroupKind.DIHEDRAL: _rotation,
    GroupKind.A4: _a4,
    GroupKind.S4: _s4,
    GroupKind.A5: _a5,
}


def shipped_generators(spec: GroupSpec) -> List[NamedMatrix]:
    return GENERATORS[spec.kind](spec)


def generator_operators(spec: GroupSpec) -> Dict[str, Op3]:
    """Adjoint action of each shipped generator, keyed by its letter name."""
    named = shipped_generators(spec)
    ops = adjoint_of_pgl2(spec, [matrix for _, matrix in named])
    return {name: op for (name, _), op in zip(named, ops)}
