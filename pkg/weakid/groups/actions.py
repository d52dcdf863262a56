"""
Realization of the group actions on sl2 and of the distinguished CG operators
"""

from fractions import Fraction
from typing import List, Sequence, Tuple

from ..arith import CycNum
from ..errors import GroupSpecError, SingularMatrixError
from .algebra import GAElem, GroupLabel, _freeze, label_name
from .operators import Op3
from .spec import GroupSpec

Matrix2 = Tuple[Tuple[CycNum, CycNum], Tuple[CycNum, CycNum]]


def action_generator_g(spec: GroupSpec) -> Op3:
    """g(a, b, c) = (a, omega^-1 b, omega c)."""
    if not spec.has_rotation:
        raise GroupSpecError(f"{spec.label} has no rotation generator g")
    w = spec.omega()
    return Op3.diagonal([1, w.inverse(), w], spec.conductor)


def action_generator_h(spec: GroupSpec) -> Op3:
    """h(a, b, c) = (-a, c, b)."""
    if not spec.is_dihedral:
        raise GroupSpecError(f"{spec.label} is not dihedral")
    return Op3([[-1, 0, 0], [0, 0, 1], [0, 1, 0]], spec.conductor)


def group_element(spec: GroupSpec, label: GroupLabel) -> Op3:
    """Realization of h^s g^j."""
    s, j = label
    op = action_generator_g(spec) ** (j % spec.n)
    if s % 2:
        op = action_generator_h(spec) @ op
    return op


def realize(spec: GroupSpec, formal) -> Op3:
    """Linear extension of group_element to a formal combination."""
    out = Op3.zero(spec.conductor)
    for label, coef in dict(formal).items():
        out = out + group_element(spec, label).scale(coef)
    return out


def canonical_index(spec: GroupSpec, i: int) -> int:
    """Reduce i mod n and write n-1 as -1 (for n >= 3)."""
    r = i % spec.n
    if spec.n >= 3 and r == spec.n - 1:
        return -1
    return r


def group_letter(spec: GroupSpec, label: GroupLabel) -> GAElem:
    label = (label[0] % 2, label[1] % spec.n)
    one = CycNum.one(spec.conductor)
    return GAElem(
        name=label_name(label),
        realized=group_element(spec, label),
        formal=((label, one),),
        n=spec.n,
    )


def idempotent(spec: GroupSpec, i: int) -> GAElem:
    """e_i = (1/n) sum_j omega^(-ij) g^j."""
    if not spec.has_rotation:
        raise GroupSpecError(f"{spec.label} has no cyclic idempotents")
    n = spec.n
    index = canonical_index(spec, i)
    w = spec.omega()
    formal = {(0, j): (w ** (-index * j)) * Fraction(1, n) for j in range(n)}
    return GAElem(name=f"e{index}", realized=realize(spec, formal), formal=_freeze(formal), n=n)


def h_idempotent(spec: GroupSpec, i: int) -> GAElem:
    """The product h e_i."""
    if not spec.is_dihedral:
        raise GroupSpecError(f"{spec.label} is not dihedral")
    product = group_letter(spec, (1, 0)) * idempotent(spec, i)
    return product.renamed(f"he{canonical_index(spec, i)}")


def epsilon(spec: GroupSpec, i: int, j: int) -> Op3:
    """eps_ij(v_k) = delta_jk v_i."""
    if not spec.is_epsilon_group:
        raise GroupSpecError(f"eps operators are defined for A4, S4, A5, not {spec.label}")
    if not (1 <= i <= 3 and 1 <= j <= 3):
        raise ValueError(f"eps indices must lie in 1..3, got ({i}, {j})")
    return Op3.unit(i - 1, j - 1, spec.conductor)


def pi_operators(spec: GroupSpec) -> Tuple[Op3, Op3]:
    """pi0 = 1 + g and pi1 = 1 - g for the Z2 action."""
    if not (spec.is_cyclic and spec.n == 2):
        raise GroupSpecError(f"pi operators are defined for Zn:2 only, not {spec.label}")
    one = Op3.identity(spec.conductor)
    g = action_generator_g(spec)
    return one + g, one - g


def _mul2(x: Matrix2, y: Matrix2) -> Matrix2:
    return (
        (x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
        (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]),
    )


def as_matrix2(rows: Sequence[Sequence], conductor: int) -> Matrix2:
    def lift(x):
        return x if isinstance(x, CycNum) else CycNum.from_rational(x, conductor)
    return ((lift(rows[0][0]), lift(rows[0][1])), (lift(rows[1][0]), lift(rows[1][1])))


def adjoint(matrix: Sequence[Sequence], conductor: int) -> Op3:
    """X -> B X B^-1 restricted to sl2, in coordinates (a, b, c)."""
    bm = as_matrix2(matrix, conductor)
    (p, q), (r, s) = bm
    det = p * s - q * r
    if det.is_zero():
        raise SingularMatrixError(f"matrix [[{p}, {q}], [{r}, {s}]] is singular")
    inv_det = det.inverse()
    b_inv = ((s * inv_det, -q * inv_det), (-r * inv_det, p * inv_det))
    zero = CycNum.zero(conductor)
    one = CycNum.one(conductor)
    basis = [((one, zero), (zero, -one)), ((zero, one), (zero, zero)), ((zero, zero), (one, zero))]
    columns = []
    for v in basis:
        image = _mul2(_mul2(bm, v), b_inv)
        columns.append((image[0][0], image[0][1], image[1][0]))
    return Op3([[columns[j][i] for j in range(3)] for i in range(3)], conductor)


def adjoint_of_pgl2(spec: GroupSpec, generators: Sequence[Sequence[Sequence]]) -> List[Op3]:
    return [adjoint(gen, spec.conductor) for gen in generators]


def conjugated_action(ops: Sequence[Op3], matrix: Sequence[Sequence]) -> List[Op3]:
    """Replace each operator phi by Ad(B) phi Ad(B)^-1."""
    if not ops:
        return []
    conductor = ops[0].conductor
    transform = adjoint(matrix, conductor)
    inverse = transform.inverse()
    return [transform @ op @ inverse for op in ops]
