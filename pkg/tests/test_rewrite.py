"""
Tests for the rewriting systems, normalization and the normal-form sets
"""

import pytest

from weakid.errors import (
    NormalFormAlphabetError,
    RuleSoundnessError,
    StepBudgetExceeded,
    TerminationMeasureError,
)
from weakid.gpoly import GMonomial, Letter, evaluate, format_polynomial, parse
from weakid.groups import GroupSpec
from weakid.rewrite import (
    RULESETS,
    CyclicRules,
    Rule,
    enumerate_B,
    family_of,
    get_ruleset,
    is_normal_form,
    normalize,
    rules_for,
    words_of_multidegree,
)


def _normalized(text: str, spec: GroupSpec) -> str:
    return format_polynomial(normalize(parse(text, spec), spec, check_steps=True))


@pytest.mark.parametrize(
    "group, text, expected",
    [
        ("Zn:3", "x1", "e0(x1) + e1(x1) + e-1(x1)"),
        ("Zn:3", "e1(x1)*e1(x2)", "0"),
        ("Zn:3", "e1(x2)*e0(x1)", "-e0(x1)*e1(x2)"),
        ("Zn:3", "e0(x2)*e0(x1)", "e0(x1)*e0(x2)"),
        ("Zn:3", "e1(x3)*e-1(x2)*e1(x1)", "e1(x1)*e-1(x2)*e1(x3)"),
        ("Zn:5", "e-1(x2)*e-1(x1)", "0"),
        ("Zn:2", "x1", "e0(x1) + e1(x1)"),
        ("Zn:2", "e1(x2)*e0(x1)", "-e0(x1)*e1(x2)"),
        ("Zn:2", "e1(x3)*e1(x2)*e1(x1)", "e1(x1)*e1(x2)*e1(x3)"),
        ("Dn:4", "he0(x1)", "-e0(x1)"),
        ("Dn:4", "e1(x1)*e1(x2)", "0"),
        ("Dn:4", "e1(x1)*he-1(x2)", "0"),
        ("A4", "eps21(x1)*eps32(x2)*eps23(x3)", "eps11(x1)*eps12(x2)*eps23(x3)"),
        ("A4", "eps22(x1)*eps23(x2)", "0"),
        ("A4", "eps12(x2)*eps11(x1)", "eps11(x1)*eps12(x2)"),
    ],
)
def test_normalize_examples(group, text, expected):
    assert _normalized(text, GroupSpec.parse(group)) == expected


@pytest.mark.parametrize(
    "group, text",
    [
        ("Zn:3", "g(x1)*g^2(x2)*x3"),
        ("Zn:4", "x2*g(x1)*x1"),
        ("Zn:2", "g(x2)*x1*g(x3)"),
        ("Dn:4", "h(x1)*hg(x2)"),
        ("Dn:3", "x2*h(x1)*g(x3)"),
        ("A4", "g(x1)*h(x2)"),
        ("S4", "x2*g(x1)"),
    ],
)
def test_normalize_preserves_evaluation_and_lands_in_B(group, text):
    spec = GroupSpec.parse(group)
    f = parse(text, spec)
    result = normalize(f, spec, check_steps=True)
    assert evaluate(result, spec) == evaluate(f, spec)
    assert all(is_normal_form(m, spec) for m in result.monomials())


def test_normal_form_is_fixed(zn3):
    for m in enumerate_B(zn3, (1, 2, 2)):
        f = parse(str(m), zn3)
        assert normalize(f, zn3) == f


def test_normalize_is_linear(dn4):
    f = parse("x1*x2", dn4)
    g = parse("h(x2)*x1", dn4)
    assert normalize(f + g, dn4) == normalize(f, dn4) + normalize(g, dn4)


def test_normalize_round_trips_through_text(a4):
    result = normalize(parse("g(x1)*x2", a4), a4)
    assert parse(format_polynomial(result), a4) == result


def test_step_budget(zn3):
    with pytest.raises(StepBudgetExceeded):
        normalize(parse("x1*x2*x3", zn3), zn3, step_budget=1)


def test_normal_form_alphabet(zn3):
    with pytest.raises(NormalFormAlphabetError):
        is_normal_form(GMonomial.of(Letter("g", 1)), zn3)


@pytest.mark.parametrize(
    "group, multidegree, count",
    [
        ("Zn:3", (1,), 3),
        ("Zn:3", (1, 2), 9),
        ("Zn:3", (1, 1), 5),
        ("Zn:3", (1, 2, 3), 25),
        ("Zn:3", (1, 1, 2), 15),
        ("Zn:7", (1, 2), 9),
        ("Zn:2", (1,), 2),
        ("Zn:2", (1, 2), 5),
        ("Zn:2", (1, 1), 3),
        ("Zn:2", (1, 2, 3), 13),
        ("Dn:4", (1,), 5),
        ("Dn:4", (1, 2), 17),
        ("Dn:4", (1, 1), 11),
        ("Dn:5", (1, 2), 17),
        ("A4", (1,), 9),
        ("A4", (1, 2), 36),
        ("A4", (1, 1), 24),
        ("A5", (1, 2), 36),
    ],
)
def test_basis_counts(group, multidegree, count):
    assert len(enumerate_B(GroupSpec.parse(group), multidegree)) == count


def test_enumeration_order_is_canonical(zn3):
    names = [str(m) for m in enumerate_B(zn3, (1,))]
    assert names == ["e0(x1)", "e1(x1)", "e-1(x1)"]


def test_trivial_group_basis():
    spec = GroupSpec.parse("Zn:1")
    assert [str(m) for m in enumerate_B(spec, (1, 2))] == ["x1*x2", "x2*x1"]
    assert _normalized("g(x1)", spec) == "x1"


def test_words_of_multidegree():
    words = words_of_multidegree(("e0", "e1"), (1, 1, 2))
    assert len(words) == 3 * 2 ** 3
    assert len(set(words)) == len(words)


def test_registry():
    assert set(RULESETS) == {"cyclic", "z2", "trivial", "dihedral", "epsilon"}
    assert family_of(GroupSpec.parse("S4")) == "epsilon"
    assert family_of(GroupSpec.parse("Dn:3")) == "dihedral"
    assert family_of(GroupSpec.parse("Zn:2")) == "z2"
    with pytest.raises(ValueError):
        get_ruleset("quaternion", GroupSpec.parse("Zn:3"))


def test_rule_listing(zn3, dn4, a4):
    assert rules_for(zn3).tags == ["lemma6.1", "lemma6.2", "lemma6.5", "lemma6.3", "lemma6.4"]
    assert "lemma9.10^h" in rules_for(dn4).tags
    assert len(rules_for(a4).tags) == 7
    assert rules_for(zn3).describe()[-1].startswith("measure:")


def test_without_removes_one_rule(zn3):
    rules = rules_for(zn3)
    mutated = rules.without("lemma6.4")
    assert "lemma6.4" not in mutated.tags
    assert len(mutated.tags) == len(rules.tags) - 1
    with pytest.raises(KeyError):
        rules.without("lemma99")


def test_mutated_rules_leave_words_outside_B(zn3):
    mutated = rules_for(zn3).without("lemma6.4")
    f = parse("e1(x3)*e-1(x2)*e1(x1)", zn3)
    result = normalize(f, zn3, rules=mutated)
    assert result == f
    assert not is_normal_form(result.monomials()[0], zn3)


@pytest.mark.parametrize("group", ["Zn:3", "Zn:2", "Dn:4", "A4"])
def test_every_rule_output_decreases_the_measure(group):
    spec = GroupSpec.parse(group)
    rules = rules_for(spec)
    for word in words_of_multidegree(rules.table.operator_names(), (1, 2)):
        step = rules.rewrite_once(word.word)
        if step is None:
            continue
        _, outputs = step
        assert all(rules.measure(w) < rules.measure(word.word) for _, w in outputs)


class _FlatCyclic(CyclicRules):
    def measure(self, word):
        return ()


def test_step_check_rejects_a_flat_measure(zn3):
    with pytest.raises(TerminationMeasureError, match="lemma6.5"):
        normalize(parse("e1(x2)*e0(x1)", zn3), zn3, rules=_FlatCyclic(zn3), check_steps=True)


def test_step_check_rejects_an_unsound_rule(zn3):
    def swap_without_sign(window, table):
        x, y = window
        if x.op != "e0" and y.op == "e0":
            return [(1, (y, x))]
        return None

    rules = rules_for(zn3)
    unsound = Rule("lemma6.5", "e_a(x2)*e0(x1) -> e0(x1)*e_a(x2)", 2, swap_without_sign)
    broken = [unsound if r.tag == "lemma6.5" else r for r in rules.rules]
    with pytest.raises(RuleSoundnessError, match="lemma6.5"):
        normalize(parse("e1(x2)*e0(x1)", zn3), zn3, rules=CyclicRules(zn3, broken), check_steps=True)
    assert normalize(parse("e1(x2)*e0(x1)", zn3), zn3, rules=CyclicRules(zn3, broken)) == parse("e0(x1)*e1(x2)", zn3)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("eps21(x1)*eps32(x2)*eps23(x3)", "eps11(x1)*eps12(x2)*eps23(x3)"),
        ("eps23(x1)*eps33(x2)*eps21(x3)", "eps11(x3)*eps13(x1)*eps23(x2)"),
        ("eps11(x2)*eps22(x3)*eps31(x1)", "eps11(x1)*eps21(x2)*eps32(x3)"),
    ],
)
def test_three_letter_epsilon_words_need_no_extra_rules(a4, text, expected):
    assert _normalized(text, a4) == expected
