"""
Tests for group specifications, realized operators and the operator table
"""

import pytest

from weakid.arith import CycNum
from weakid.errors import GroupClosureError, GroupSpecError, SingularMatrixError, UnknownOperatorError
from weakid.groups import (
    GroupSpec,
    Op3,
    adjoint,
    adjoint_of_pgl2,
    check_irreducible,
    conjugated_action,
    generator_operators,
    group_closure,
    operator_table,
    pi_operators,
    shipped_generators,
)


@pytest.mark.parametrize(
    "text, conductor",
    [("Zn:1", 1), ("Zn:5", 5), ("Dn:4", 4), ("A4", 4), ("S4", 8), ("A5", 20), (" Zn : 3 ", 3)],
)
def test_parse(text, conductor):
    assert GroupSpec.parse(text).conductor == conductor


@pytest.mark.parametrize("text", ["Dn:2", "Dn:1", "Zn:0", "Q8", "", "A4:3", "Zn"])
def test_parse_rejects(text):
    with pytest.raises(GroupSpecError):
        GroupSpec.parse(text)


def test_conductor_override():
    assert GroupSpec.parse("Zn:3", conductor=12).conductor == 12
    assert GroupSpec.parse("Zn:3").lift(6).conductor == 6
    with pytest.raises(GroupSpecError):
        GroupSpec.parse("Zn:3", conductor=10)


def test_root_power_must_be_a_unit():
    assert GroupSpec.parse("Zn:5", root_power=2).omega() == CycNum.zeta(5) ** 2
    with pytest.raises(GroupSpecError):
        GroupSpec.parse("Zn:4", root_power=2)


def test_orders():
    assert [GroupSpec.parse(t).order for t in ("Zn:5", "Dn:5", "A4", "S4", "A5")] == [5, 10, 12, 24, 60]


def test_rotation_realization(zn3):
    table = operator_table(zn3)
    g = table.realized("g")
    w = zn3.omega()
    assert g == Op3.diagonal([1, w.inverse(), w], 3)
    assert (g ** 3).is_identity()
    assert not (g ** 2).is_identity()
    assert table.realized("g^3") == table.realized("id")


def test_reflection_realization(dn4):
    h = operator_table(dn4).realized("h")
    assert h == Op3([[-1, 0, 0], [0, 0, 1], [0, 1, 0]], 4)
    assert (h ** 2).is_identity()


def test_shipped_generators_realize_the_actions(zn3, dn4):
    assert generator_operators(zn3)["g"] == operator_table(zn3).realized("g")
    assert generator_operators(dn4)["h"] == operator_table(dn4).realized("h")


@pytest.mark.parametrize("text, order", [("Zn:3", 3), ("Dn:4", 8), ("A4", 12), ("S4", 24), ("A5", 60)])
def test_group_elements(text, order):
    elements = operator_table(GroupSpec.parse(text)).group_elements()
    assert len(elements) == order
    assert len(set(elements)) == order


def test_idempotents_sum_to_identity():
    for text in ("Zn:3", "Zn:4", "Zn:6"):
        spec = GroupSpec.parse(text)
        table = operator_table(spec)
        total = Op3.zero(spec.conductor)
        for i in range(spec.n):
            total = total + table.realized(f"e{i}")
        assert total.is_identity()


@pytest.mark.parametrize("text", ["Zn:3", "Zn:5", "Dn:4", "Dn:6"])
def test_rotation_scales_idempotents_by_their_eigenvalue(text):
    spec = GroupSpec.parse(text)
    table = operator_table(spec)
    g = table.realized("g")
    w = spec.omega()
    for i in range(spec.n):
        e = table.realized(f"e{i}")
        assert g @ e == e.scale(w ** i)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_dihedral_relations(n):
    table = operator_table(GroupSpec.parse(f"Dn:{n}"))
    g, h = table.realized("g"), table.realized("h")
    assert ((h @ g) ** 2).is_identity()
    assert h @ g @ h == g.inverse()
    assert h @ g @ h == g ** (n - 1)
    assert table.realized("hg") == h @ g


def test_idempotents_are_orthogonal(zn3):
    table = operator_table(zn3)
    e0, e1 = table.realized("e0"), table.realized("e1")
    assert e0 @ e0 == e0
    assert (e0 @ e1).is_zero()


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_annihilation(n):
    cyclic = operator_table(GroupSpec.parse(f"Zn:{n}"))
    dihedral = operator_table(GroupSpec.parse(f"Dn:{n}"))
    for i in range(2, n - 1):
        assert cyclic.realized(f"e{i}").is_zero()
        assert dihedral.realized(f"e{i}").is_zero()
        assert dihedral.realized(f"he{i}").is_zero()
    assert not cyclic.realized(f"e{n - 1}").is_zero()


def test_canonical_names(zn3):
    table = operator_table(zn3)
    assert table.canonical("e2") == "e-1"
    assert table.canonical("e-1") == "e-1"
    assert table.canonical("g^4") == "g"


def test_unknown_operators(zn3, a4):
    with pytest.raises(UnknownOperatorError):
        operator_table(zn3).canonical("he1")
    with pytest.raises(UnknownOperatorError):
        operator_table(zn3).canonical("eps11")
    with pytest.raises(UnknownOperatorError):
        operator_table(a4).canonical("e0")


def test_decompose_identity(zn3):
    parts = dict(operator_table(zn3).decompose("id"))
    assert parts == {"e0": 1, "e1": 1, "e-1": 1}


def test_decompose_rotation(zn3):
    w = zn3.omega()
    parts = dict(operator_table(zn3).decompose("g"))
    assert parts["e0"] == 1
    assert parts["e1"] == w
    assert parts["e-1"] == w.inverse()


def test_decompose_reflection(dn4):
    parts = dict(operator_table(dn4).decompose("h"))
    assert parts["he1"] == 1
    assert parts["he-1"] == 1
    assert "e0" in parts


def test_epsilon_basis(a4):
    table = operator_table(a4)
    assert table.basis_names == [f"eps{i}{j}" for i in (1, 2, 3) for j in (1, 2, 3)]
    total = Op3.zero(a4.conductor)
    for name in ("eps11", "eps22", "eps33"):
        total = total + table.realized(name)
    assert total.is_identity()
    assert dict(table.decompose("id")) == {"eps11": 1, "eps22": 1, "eps33": 1}


@pytest.mark.parametrize("text", ["A4", "S4", "A5"])
def test_epsilon_product_rule(text):
    spec = GroupSpec.parse(text)
    table = operator_table(spec)
    indices = [(i, j) for i in (1, 2, 3) for j in (1, 2, 3)]
    for i, j in indices:
        for k, l in indices:
            product = table.realized(f"eps{i}{j}") @ table.realized(f"eps{k}{l}")
            if j == k:
                assert product == table.realized(f"eps{i}{l}")
            else:
                assert product.is_zero()


def test_epsilon_operators_are_irreducible(a4):
    table = operator_table(a4)
    report = check_irreducible([table.realized(name) for name in table.basis_names])
    assert report.algebra_dim == 9
    assert report.commutant_dim == 1
    assert report.irreducible


@pytest.mark.parametrize("text", ["A4", "S4", "A5"])
def test_shipped_generators_are_irreducible(text):
    report = check_irreducible(list(generator_operators(GroupSpec.parse(text)).values()))
    assert report.algebra_dim == 9
    assert report.commutant_dim == 1


def test_rotation_groups_are_reducible(zn3, dn4):
    assert not check_irreducible(operator_table(zn3).group_elements()).irreducible
    assert not check_irreducible(operator_table(dn4).group_elements()).irreducible


def test_adjoint_rejects_singular_matrices():
    with pytest.raises(SingularMatrixError):
        adjoint([[1, 2], [2, 4]], 1)


def test_adjoint_of_scalar_is_identity():
    assert adjoint([[3, 0], [0, 3]], 1).is_identity()


def test_conjugated_table_preserves_products(a4):
    i = CycNum.zeta(4)
    table = operator_table(a4).conjugated([[1, i], [0, 2]])
    assert table.is_conjugated
    e11, e12 = table.realized("eps11"), table.realized("eps12")
    assert e11 @ e12 == e12
    assert (e12 @ e11).is_zero()


def test_group_closure_is_bounded():
    with pytest.raises(GroupClosureError, match="10 elements"):
        group_closure([Op3.diagonal([1, 2, 1], 1)], limit=10)


def test_pi_operators(zn2, zn3):
    pi0, pi1 = pi_operators(zn2)
    table = operator_table(zn2)
    assert pi0 == table.realized("e0").scale(2)
    assert pi1 == table.realized("e1").scale(2)
    assert (pi0 @ pi1).is_zero()
    with pytest.raises(GroupSpecError):
        pi_operators(zn3)


def test_adjoint_of_pgl2_matches_generator_operators(dn4):
    matrices = [matrix for _, matrix in shipped_generators(dn4)]
    ops = adjoint_of_pgl2(dn4, matrices)
    assert ops == list(generator_operators(dn4).values())


def test_conjugated_action(a4):
    base = operator_table(a4)
    matrix = [[1, CycNum.zeta(4)], [0, 2]]
    elements = base.group_elements()
    conjugated = conjugated_action(elements, matrix)
    assert conjugated == base.conjugated(matrix).group_elements()
    assert check_irreducible(conjugated).irreducible
    assert conjugated_action(elements, [[1, 0], [0, 1]]) == elements
    assert conjugated_action([], matrix) == []
