"""
Tests for identity suites, independence checks, the oracle and basis certificates
"""

import json

import pytest

from weakid.arith import CycNum
from weakid.certify import (
    SUITES,
    EvalVector,
    ambient_dimension,
    certified_multidegrees,
    certify_basis,
    check_identity,
    compositions,
    distinct_supports,
    gaussian_lift,
    independence_check,
    quotient_dimension_oracle,
    random_conjugators,
    recover_normal_form,
    spanning_operators,
    suite_templates,
    suites_for,
    verify_conjugated,
    verify_identity_suite,
)
from weakid.config import Config
from weakid.errors import GroupSpecError, OracleBudgetExceeded
from weakid.gpoly import Evaluator, GMonomial, Letter, is_weak_g_identity, parse
from weakid.groups import GroupSpec, Op3, operator_table
from weakid.rewrite import enumerate_B, rules_for


@pytest.mark.parametrize("group", ["Zn:2", "Zn:3", "Zn:4", "Zn:5", "Zn:6", "Zn:8"])
def test_cyclic_suites_hold(group):
    results = verify_identity_suite(GroupSpec.parse(group))
    assert results
    assert all(r.ok for r in results), [r.tag for r in results if not r.ok]


@pytest.mark.parametrize("group", ["Dn:3", "Dn:4", "Dn:5", "Dn:6"])
def test_dihedral_suites_hold(group):
    results = verify_identity_suite(GroupSpec.parse(group))
    assert any(r.tag.startswith("lemma9.10") for r in results)
    assert all(r.ok for r in results), [r.tag for r in results if not r.ok]


@pytest.mark.parametrize("group", ["A4", "S4", "A5"])
def test_epsilon_suites_hold(group):
    results = verify_identity_suite(GroupSpec.parse(group), ["lemma13"])
    assert len(results) >= 100
    assert all(r.ok for r in results), [r.tag for r in results if not r.ok]


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_annihilation_suite(n):
    for family in ("Zn", "Dn"):
        results = verify_identity_suite(GroupSpec.parse(f"{family}:{n}"), ["annihilation"])
        assert len(results) == (n - 3) * (2 if family == "Dn" else 1)
        assert all(r.ok for r in results)


def test_suite_selection(zn3, zn2, dn4, a4):
    assert suites_for(zn3) == ["lemma6", "prop6-graded", "annihilation"]
    assert suites_for(zn2) == ["z2", "prop6-graded", "annihilation"]
    assert "lemma9" in suites_for(dn4)
    assert suites_for(a4) == ["prop6-graded", "lemma13"]
    with pytest.raises(GroupSpecError):
        suite_templates("lemma9", zn3)
    with pytest.raises(ValueError):
        suite_templates("lemma42", zn3)


@pytest.mark.parametrize("group", ["Zn:3", "Zn:2", "Dn:4", "A4"])
def test_flipped_signs_are_not_identities(group):
    spec = GroupSpec.parse(group)
    for name in suites_for(spec):
        for tag, lhs, rhs in suite_templates(name, spec):
            if rhs == "0":
                continue
            assert not is_weak_g_identity(parse(f"{lhs} + ({rhs})", spec), spec), tag


def test_failure_reports_an_entry(zn3):
    result = check_identity(parse("x1", zn3), Evaluator(zn3), "x1")
    assert not result.ok
    assert result.detail == "entry (1,1) = a1"


def test_random_conjugators_are_reproducible():
    first = random_conjugators(3, 4, seed=7)
    assert first == random_conjugators(3, 4, seed=7)
    for (p, q), (r, s) in first:
        assert not (p * s - q * r).is_zero()
    with pytest.raises(ValueError):
        random_conjugators(1, 6)


def test_gaussian_lift():
    assert gaussian_lift(GroupSpec.parse("Zn:3")).conductor == 12
    assert gaussian_lift(GroupSpec.parse("Zn:5")).conductor == 20
    assert gaussian_lift(GroupSpec.parse("Zn:6")).conductor == 12
    assert gaussian_lift(GroupSpec.parse("A4")).conductor == 4


@pytest.mark.parametrize(
    "group, suite",
    [
        ("Zn:2", "z2"),
        ("Zn:3", "lemma6"),
        pytest.param("Dn:4", "lemma9", marks=pytest.mark.slow),
        pytest.param("A4", "lemma13", marks=pytest.mark.slow),
    ],
)
def test_identities_survive_conjugation(group, suite):
    runs = verify_conjugated(GroupSpec.parse(group), 10, seed=1, suites=[suite])
    assert [index for index, _ in runs] == list(range(10))
    for index, results in runs:
        assert results
        assert all(r.ok for r in results), (index, [r.tag for r in results if not r.ok])


def test_pi_triple_survives_conjugation():
    runs = verify_conjugated(GroupSpec.parse("Zn:2"), 10, seed=3, suites=["z2"])
    for _, results in runs:
        assert any(r.tag.startswith("z2") for r in results)
        assert all(r.ok for r in results)


@pytest.mark.parametrize("group, suite", [("Zn:3", "lemma6"), ("Zn:2", "z2"), ("Dn:4", "lemma9"), ("A4", "lemma13")])
def test_a_flipped_sign_fails_the_suite(monkeypatch, group, suite):
    spec = GroupSpec.parse(group)
    original = SUITES[suite]
    templates = original(spec)
    index = next(k for k, (_, _, rhs) in enumerate(templates) if rhs != "0")
    tag, lhs, rhs = templates[index]

    def flipped(s):
        out = list(original(s))
        out[index] = (tag, lhs, f"-({rhs})")
        return out

    monkeypatch.setitem(SUITES, suite, flipped)
    results = verify_identity_suite(spec, [suite])
    assert len(results) == len(templates)
    assert not results[index].ok
    assert results[index].detail.startswith("entry")
    assert all(r.ok for k, r in enumerate(results) if k != index)


def test_compositions():
    assert sorted(compositions(3)) == [(1, 1, 1), (1, 1, 2), (1, 2, 2), (1, 2, 3)]
    assert len(certified_multidegrees(4)) == 2 ** 4 - 1


def test_independence_of_B(zn3):
    basis = enumerate_B(zn3, (1, 2))
    result = independence_check(basis, Evaluator(zn3))
    assert result.independent
    assert result.rank == 9
    assert result.dependent_subset is None


@pytest.mark.parametrize("group", ["Zn:3", "Dn:4", "A4"])
def test_independence_accepts_a_spec_or_a_table(group):
    spec = GroupSpec.parse(group)
    basis = enumerate_B(spec, (1, 2))
    by_spec = independence_check(basis, spec)
    by_table = independence_check(basis, operator_table(spec))
    assert by_spec.independent and by_table.independent
    assert by_spec.rank == by_table.rank == len(basis)


def test_dependence_witness(zn3):
    ev = Evaluator(zn3)
    words = [GMonomial.of(Letter(op, 1)) for op in ("id", "e0", "e1", "e-1")]
    result = independence_check(words, ev)
    assert result.rank == 3
    assert not result.independent
    total = EvalVector(3, {})
    for m, coef in result.dependent_subset:
        total = total + EvalVector.from_mat2(ev.monomial(m)).scale(coef)
    assert total.is_zero()
    assert len(result.dependent_subset) == 4


def test_zero_word_is_dependent(zn3):
    m = GMonomial.of(Letter("e1", 1), Letter("e1", 2))
    result = independence_check([m], Evaluator(zn3))
    assert result.rank == 0
    assert result.dependent_subset == [(m, CycNum.one(3))]


@pytest.mark.parametrize(
    "group, multidegree, dim",
    [
        ("Zn:3", (1,), 3),
        ("Zn:3", (1, 2), 9),
        ("Zn:3", (1, 1), 5),
        ("Zn:3", (1, 1, 2), 15),
        ("Zn:2", (1, 2, 3), 13),
        ("Dn:4", (1, 2), 17),
        ("Dn:4", (1, 1), 11),
        ("A4", (1, 2), 36),
        ("A4", (1, 1), 24),
    ],
)
def test_oracle_dimensions(group, multidegree, dim):
    assert quotient_dimension_oracle(GroupSpec.parse(group), multidegree) == dim


def test_oracle_alphabet(zn3, a4):
    units = {Op3.unit(i, j, 4) for i in range(3) for j in range(3)}
    assert set(spanning_operators(operator_table(a4))) == units
    assert spanning_operators(operator_table(zn3)) == [Op3.unit(i, i, 3) for i in range(3)]


def test_ambient_dimension():
    assert ambient_dimension((1,)) == 12
    assert ambient_dimension((1, 2)) == 36
    assert ambient_dimension((1, 1)) == 24
    assert ambient_dimension((1, 2, 3)) == 108


@pytest.mark.slow
def test_oracle_reaches_the_ambient_dimension_for_a4(a4):
    assert quotient_dimension_oracle(a4, (1, 2, 3)) == 108
    assert quotient_dimension_oracle(a4, (1, 1, 2)) == len(enumerate_B(a4, (1, 1, 2)))


def test_oracle_budget(zn3):
    assert quotient_dimension_oracle(zn3, ()) == 1
    with pytest.raises(OracleBudgetExceeded):
        quotient_dimension_oracle(zn3, (1, 2, 3, 4, 5, 6))


def test_certificate_for_zn3():
    spec = GroupSpec.parse("Zn:3")
    cert = certify_basis(spec, 3)
    assert cert.passed
    assert len(cert.multidegrees) == 7
    for record in cert.multidegrees:
        assert record.b_count == record.rank == record.oracle_dim
        assert record.spanning_ok
        assert record.witness is None
    assert cert.failures() == []


@pytest.mark.parametrize("group, degree", [("Zn:2", 3), ("Zn:5", 2), ("Dn:4", 2), ("A4", 2), ("S4", 2)])
def test_certificates_pass(group, degree):
    cert = certify_basis(GroupSpec.parse(group), degree)
    assert cert.verdict == "pass", [(r.degree, r.witness) for r in cert.failures()]


def test_certificate_json_schema():
    cert = certify_basis(GroupSpec.parse("Zn:3"), 2)
    doc = json.loads(cert.to_json())
    assert set(doc) == {"group", "conductor", "degree_bound", "identities", "multidegrees", "verdict", "runtime_ms"}
    assert doc["group"] == "Zn:3"
    assert doc["conductor"] == 3
    assert doc["degree_bound"] == 2
    assert set(doc["identities"][0]) == {"tag", "ok"}
    assert set(doc["multidegrees"][0]) == {"degree", "b_count", "rank", "oracle_dim", "spanning_ok"}
    assert doc["verdict"] == "pass"


def _every_tag(group, degree, *marks):
    tags = rules_for(GroupSpec.parse(group)).tags
    return [pytest.param(group, tag, degree, marks=marks, id=f"{group}-{tag}") for tag in tags]


@pytest.mark.parametrize(
    "group, tag, degree",
    _every_tag("Zn:3", 3)
    + _every_tag("Zn:2", 3)
    + _every_tag("A4", 2)
    + _every_tag("Dn:4", 3, pytest.mark.slow)
    + _every_tag("A4", 3, pytest.mark.slow),
)
def test_removing_a_rule_breaks_the_certificate(group, tag, degree):
    spec = GroupSpec.parse(group)
    cert = certify_basis(spec, degree, rules=rules_for(spec).without(tag))
    assert cert.verdict == "fail"
    assert any(not record.spanning_ok for record in cert.multidegrees)


@pytest.mark.slow
@pytest.mark.parametrize("group, degree", [("Zn:3", 4), ("Zn:5", 3), ("Dn:4", 3), ("A4", 3)])
def test_acceptance_certificates(group, degree):
    spec = GroupSpec.parse(group)
    cert = certify_basis(spec, degree)
    assert cert.verdict == "pass", [(r.degree, r.witness) for r in cert.failures()]
    assert len(cert.multidegrees) == len(certified_multidegrees(degree))
    for record in cert.multidegrees:
        assert record.b_count == record.rank == record.oracle_dim


def test_lemma64_failure_appears_in_degree_three():
    spec = GroupSpec.parse("Zn:3")
    cert = certify_basis(spec, 3, rules=rules_for(spec).without("lemma6.4"))
    failing = {tuple(record.degree) for record in cert.failures()}
    assert failing
    assert all(len(degree) == 3 for degree in failing)


def test_trivial_group_is_not_certified():
    with pytest.raises(GroupSpecError):
        certify_basis(GroupSpec.parse("Zn:1"), 2)


def test_parallel_certificate_matches_sequential():
    spec = GroupSpec.parse("Zn:3")
    config = Config.for_group(spec)
    config.certify.workers = 2
    parallel = certify_basis(spec, 2, config=config)
    sequential = certify_basis(spec, 2)
    assert parallel.multidegrees == sequential.multidegrees


def test_certificates_are_galois_stable():
    first = certify_basis(GroupSpec.parse("Zn:5"), 2)
    second = certify_basis(GroupSpec.parse("Zn:5", root_power=2), 2)
    assert first.passed and second.passed
    assert first.multidegrees == second.multidegrees


def test_progress_callback():
    seen = []
    certify_basis(GroupSpec.parse("Zn:3"), 2, on_record=seen.append)
    assert [tuple(record.degree) for record in seen] == [(1,), (1, 2), (1, 1)]


@pytest.mark.parametrize("multidegree", [(1,), (1, 2), (1, 1), (1, 1, 2)])
def test_recover_normal_form(a4, multidegree):
    ev = Evaluator(a4)
    for m in enumerate_B(a4, multidegree):
        vector = EvalVector.from_mat2(ev.monomial(m))
        assert recover_normal_form(vector, a4) == m


def test_recover_normal_form_worked_example(a4):
    monomial = (((0, 1), 2), ((1, 10), 1), ((2, 2), 1), ((2, 7), 1))
    one = CycNum.one(4)
    upper = EvalVector(4, {(2, monomial): one})
    assert str(recover_normal_form(upper, a4)) == "eps11(x1)*eps11(x1)*eps12(x10)*eps13(x2)*eps23(x7)"
    corner = EvalVector(4, {(1, monomial): one})
    assert str(recover_normal_form(corner, a4)) == "eps11(x1)*eps11(x1)*eps12(x10)*eps23(x2)*eps33(x7)"


def test_recover_normal_form_needs_epsilon_group(zn3):
    with pytest.raises(GroupSpecError):
        recover_normal_form(EvalVector(3, {}), zn3)


def test_B_evaluations_have_distinct_supports(a4):
    ev = Evaluator(a4)
    for multidegree in ((1, 2), (1, 1, 2)):
        vectors = [EvalVector.from_mat2(ev.monomial(m)) for m in enumerate_B(a4, multidegree)]
        assert distinct_supports(vectors)
    twice = EvalVector.from_mat2(ev.monomial(enumerate_B(a4, (1,))[0]))
    assert not distinct_supports([twice, twice])
