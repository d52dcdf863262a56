"""
Tests for sparse polynomials and generic matrices
"""

import pytest
import sympy

from weakid.arith import MPoly, a, b, c
from weakid.pair import Mat2, SL2Coords, commutator, generic_matrix, is_zero_mat, mat_mul

from .conftest import to_sympy


def test_polynomial_arithmetic_matches_sympy():
    p = (a(1) + 2 * b(2) - c(1)) * (a(1) - b(2))
    a1, b2, c1 = sympy.symbols("a1 b2 c1")
    assert to_sympy(p) == sympy.expand((a1 + 2 * b2 - c1) * (a1 - b2))
    assert to_sympy(p ** 2) == sympy.expand(((a1 + 2 * b2 - c1) * (a1 - b2)) ** 2)


def test_cancellation_leaves_zero():
    p = a(1) * b(1) - b(1) * a(1)
    assert p.is_zero()
    assert p == 0
    assert str(p) == "0"


def test_str():
    assert str(a(1) * a(1) - 2 * b(3)) == "a1^2 - 2*b3"


def test_invalid_variable():
    with pytest.raises(ValueError):
        MPoly.variable(3, 1, 1)
    with pytest.raises(ValueError):
        MPoly.variable(0, 0, 1)


def test_generic_matrix_is_traceless():
    x = generic_matrix(2)
    assert x.trace().is_zero()
    coords = SL2Coords.from_mat2(x)
    assert coords.as_tuple() == (a(2), b(2), c(2))
    assert coords.to_mat2() == x


def test_traceless_check():
    with pytest.raises(ValueError):
        SL2Coords.from_mat2(Mat2.identity(1))


def test_product_matches_sympy():
    x, y = generic_matrix(1), generic_matrix(2)
    a1, b1, c1, a2, b2, c2 = sympy.symbols("a1 b1 c1 a2 b2 c2")
    X = sympy.Matrix([[a1, b1], [c1, -a1]])
    Y = sympy.Matrix([[a2, b2], [c2, -a2]])
    expected = (X * Y).applyfunc(sympy.expand)
    product = x * y
    assert [to_sympy(e) for e in product.entries()] == list(expected)


def test_square_of_generic_matrix_is_scalar():
    x = generic_matrix(1)
    square = x * x
    assert square.m12.is_zero() and square.m21.is_zero()
    assert square.m11 == square.m22 == a(1) * a(1) + b(1) * c(1)


def test_commutator_is_traceless():
    assert commutator(generic_matrix(1), generic_matrix(2)).trace().is_zero()
    assert is_zero_mat(commutator(generic_matrix(1), generic_matrix(1)))
    assert not is_zero_mat(mat_mul(generic_matrix(1), generic_matrix(2)))


@pytest.mark.parametrize("i, j", [(1, 2), (2, 3), (3, 1)])
def test_commutator_is_antisymmetric(i, j):
    x, y = generic_matrix(i), generic_matrix(j)
    assert commutator(x, y) == -commutator(y, x)
    assert is_zero_mat(commutator(x, y) + commutator(y, x))


def test_commutator_satisfies_jacobi():
    x, y, z = generic_matrix(1), generic_matrix(2), generic_matrix(3)
    total = commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) + commutator(z, commutator(x, y))
    assert is_zero_mat(total)
