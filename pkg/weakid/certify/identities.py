"""
The listed weak G-identities as parseable templates, and their verification
"""

import logging
import random
from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..arith import CycNum, cyc_embed
from ..errors import GroupSpecError
from ..groups import GroupSpec, OperatorTable, canonical_index, operator_table
from ..gpoly import Evaluator, GPolynomial, parse
from ..pair import Mat2

logger = logging.getLogger(__name__)

# (tag, left side, right side)
Template = Tuple[str, str, str]

SIGNS = (1, -1)


def _e(alpha: int) -> str:
    return "e1" if alpha == 1 else "e-1"


def _he(alpha: int) -> str:
    return "he1" if alpha == 1 else "he-1"


def _lemma6(spec: GroupSpec) -> List[Template]:
    n, big = spec.n, spec.conductor
    p = (spec.root_power * (big // n)) % big
    out = [
        ("lemma6.1", "e0(x1) + e1(x1) + e-1(x1)", "x1"),
        ("lemma6.1[g]", "g(x1)", f"e0(x1) + w^{p}*e1(x1) + w^{(-p) % big}*e-1(x1)"),
        ("lemma6.3", "e0(x1)*e0(x2)", "e0(x2)*e0(x1)"),
    ]
    for a in SIGNS:
        A, M = _e(a), _e(-a)
        out += [
            (f"lemma6.2[a={a}]", f"{A}(x1)*{A}(x2)", "0"),
            (f"lemma6.4[a={a}]", f"{A}(x1)*{M}(x2)*{A}(x3)", f"{A}(x3)*{M}(x2)*{A}(x1)"),
            (f"lemma6.5[a={a}]", f"e0(x1)*{A}(x2) + {A}(x2)*e0(x1)", "0"),
        ]
    return out


def _z2(spec: GroupSpec) -> List[Template]:
    return [
        ("z2.0", "pi0(x1) + pi1(x1)", "2*x1"),
        ("z2.1", "pi0(x1)*pi0(x2)", "pi0(x2)*pi0(x1)"),
        ("z2.2", "pi1(x1)*pi1(x2)*pi1(x3)", "pi1(x3)*pi1(x2)*pi1(x1)"),
        ("z2.3", "pi0(x1)*pi1(x2) + pi1(x2)*pi0(x1)", "0"),
    ]


def _graded_letters(spec: GroupSpec) -> Tuple[str, Callable[[int], str]]:
    """Diagonal letter y and off-diagonal combination z of the grading on sl2."""
    if spec.is_epsilon_group:
        return "eps11", lambda v: f"(eps22(x{v}) + eps33(x{v}))"
    if spec.n == 2:
        return "e0", lambda v: f"e1(x{v})"
    return "e0", lambda v: f"(e1(x{v}) + e-1(x{v}))"


def _prop6_graded(spec: GroupSpec) -> List[Template]:
    if spec.has_rotation and spec.n == 1:
        return []
    y, z = _graded_letters(spec)
    return [
        ("prop6.1", f"[{y}(x1), {y}(x2)]", "0"),
        ("prop6.2", f"{z(1)}*{z(2)}*{z(3)}", f"{z(3)}*{z(2)}*{z(1)}"),
        ("prop6.3", f"{y}(x1)*{z(2)} + {z(2)}*{y}(x1)", "0"),
    ]


def _lemma9(spec: GroupSpec) -> List[Template]:
    out = [
        ("lemma9.1", "e0(x1) + he0(x1)", "0"),
        ("lemma9.3", "e0(x1) + e1(x1) + e-1(x1)", "x1"),
        ("lemma9.4", "[e0(x1), e0(x2)]", "0"),
    ]
    for a in SIGNS:
        A, M, HA, HM = _e(a), _e(-a), _he(a), _he(-a)
        for f in (A, HA):
            out += [
                (f"lemma9.2[a={a},f={f}]", f"e0(x1)*{f}(x2) + {f}(x2)*e0(x1)", "0"),
                (f"lemma9.5[a={a},f={f}]", f"{f}(x1)*{f}(x2)", "0"),
            ]
        out += [
            (f"lemma9.6[a={a},f={A}]", f"{A}(x1)*{HM}(x2)", "0"),
            (f"lemma9.6[a={a},f={HA}]", f"{HA}(x1)*{M}(x2)", "0"),
        ]
        for f, g in product((A, HA), repeat=2):
            out.append((f"lemma9.7[a={a},f={f},g={g}]", f"{f}(x1)*x2*{g}(x3)", f"{f}(x3)*x2*{g}(x1)"))
        out += [
            (f"lemma9.8[a={a}]", f"{A}(x1)*x2*{HM}(x3)", f"{HM}(x3)*x2*{A}(x1)"),
            (f"lemma9.9[a={a}]", f"{A}(x1)*{M}(x2)", f"{HM}(x2)*{HA}(x1)"),
            (f"lemma9.10[a={a}]", f"{A}(x1)*{HA}(x2)", f"{A}(x2)*{HA}(x1)"),
        ]
    return out


def _lemma13(spec: GroupSpec) -> List[Template]:
    idx = (1, 2, 3)
    upper = (2, 3)
    out = [("lemma13.1", "eps11(x1) + eps22(x1) + eps33(x1)", "x1")]
    for a, b in product(idx, repeat=2):
        out.append((f"lemma13.2[a={a},b={b}]", f"[eps1{a}(x1), eps1{b}(x2)]", "0"))
    for i, j, a in product(upper, idx, idx):
        out.append(
            (f"lemma13.3[i={i},j={j},a={a}]", f"eps1{a}(x1)*eps{i}{j}(x2) + eps{i}{j}(x2)*eps1{a}(x1)", "0")
        )
    for (i, j), a, b, c in product(((2, 3), (3, 2)), idx, idx, idx):
        out.append((
            f"lemma13.4[i={i},j={j},a={a},b={b},c={c}]",
            f"eps{i}{a}(x1)*eps{j}{b}(x2)*eps{i}{c}(x3)",
            f"eps1{a}(x1)*eps1{b}(x2)*eps{i}{c}(x3)",
        ))
    for i, a, b in product(upper, idx, idx):
        out.append((f"lemma13.5[i={i},a={a},b={b}]", f"eps{i}{a}(x1)*eps{i}{b}(x2)", "0"))
    for a, b in product(idx, repeat=2):
        out.append((
            f"lemma13.6[a={a},b={b}]",
            f"eps3{a}(x1)*eps2{b}(x2) + eps2{b}(x2)*eps3{a}(x1)",
            f"eps1{a}(x1)*eps1{b}(x2)",
        ))
    for j, a, b in product(upper, idx, idx):
        out.append((f"lemma13.7[j={j},a={a},b={b}]", f"eps1{a}(x1)*eps{j}{b}(x2)", f"eps1{b}(x2)*eps{j}{a}(x1)"))
    for a, b in product(idx, repeat=2):
        out.append((f"lemma13.8[a={a},b={b}]", f"eps2{a}(x1)*eps3{b}(x2)", f"eps2{b}(x2)*eps3{a}(x1)"))
    return out


def _annihilation(spec: GroupSpec) -> List[Template]:
    if not spec.has_rotation:
        return []
    out = []
    for i in range(spec.n):
        if canonical_index(spec, i) in (0, 1, -1):
            continue
        out.append((f"annihilation.e{i}", f"e{i}(x1)", "0"))
        if spec.is_dihedral:
            out.append((f"annihilation.he{i}", f"he{i}(x1)", "0"))
    return out


SUITES: Dict[str, Callable[[GroupSpec], List[Template]]] = {
    "lemma6": _lemma6,
    "z2": _z2,
    "prop6-graded": _prop6_graded,
    "lemma9": _lemma9,
    "lemma13": _lemma13,
    "annihilation": _annihilation,
}


def _applies(name: str, spec: GroupSpec) -> bool:
    if name == "lemma6":
        return spec.is_cyclic and spec.n >= 3
    if name == "z2":
        return spec.is_cyclic and spec.n == 2
    if name == "lemma9":
        return spec.is_dihedral
    if name == "lemma13":
        return spec.is_epsilon_group
    if name == "annihilation":
        return spec.has_rotation
    return True


def suites_for(spec: GroupSpec) -> List[str]:
    """Suite names that apply to the group, in listing order."""
    return [name for name in SUITES if _applies(name, spec)]


def suite_templates(name: str, spec: GroupSpec) -> List[Template]:
    if name not in SUITES:
        available = ", ".join(SUITES.keys())
        raise ValueError(f"Unknown suite '{name}'. Available: {available}")
    if not _applies(name, spec):
        raise GroupSpecError(f"Suite '{name}' does not apply to {spec.label}")
    return SUITES[name](spec)


@dataclass(frozen=True)
class IdentityInstance:
    tag: str
    text: str
    polynomial: GPolynomial


@dataclass(frozen=True)
class IdentityResult:
    tag: str
    ok: bool
    # one non-zero entry of the evaluation when ok is False
    detail: str = ""


def build_suite(name: str, spec: GroupSpec, table: Optional[OperatorTable] = None) -> List[IdentityInstance]:
    table = table or operator_table(spec)
    instances = []
    for tag, lhs, rhs in suite_templates(name, spec):
        text = lhs if rhs == "0" else f"{lhs} - ({rhs})"
        instances.append(IdentityInstance(tag, text, parse(text, spec, table)))
    return instances


def first_nonzero_entry(x: Mat2) -> str:
    for (i, j), entry in zip(((1, 1), (1, 2), (2, 1), (2, 2)), x.entries()):
        if not entry.is_zero():
            return f"entry ({i},{j}) = {entry}"
    return ""


def check_identity(f: GPolynomial, evaluator: Evaluator, tag: str = "") -> IdentityResult:
    value = evaluator(f)
    if value.is_zero():
        return IdentityResult(tag, True)
    return IdentityResult(tag, False, first_nonzero_entry(value))


def verify_identity_suite(
    spec: GroupSpec,
    suites: Optional[Sequence[str]] = None,
    table: Optional[OperatorTable] = None,
) -> List[IdentityResult]:
    """Evaluate every listed identity of the selected suites (all applicable ones by default)."""
    table = table or operator_table(spec)
    evaluator = Evaluator(table)
    results = []
    for name in suites or suites_for(spec):
        for instance in build_suite(name, spec, table):
            result = check_identity(instance.polynomial, evaluator, instance.tag)
            if not result.ok:
                logger.warning("%s is not an identity: %s", instance.tag, result.detail)
            results.append(result)
    return results


def random_conjugators(count: int, conductor: int, seed: int = 0, bound: int = 3) -> List[List[List[CycNum]]]:
    """Invertible 2x2 matrices with Gaussian-integer entries; needs 4 | conductor."""
    if conductor % 4:
        raise ValueError(f"Gaussian-integer conjugators need a conductor divisible by 4, got {conductor}")
    rng = random.Random(seed)
    i = cyc_embed(4, 1, conductor)
    out = []
    while len(out) < count:
        entries = [CycNum.from_rational(rng.randint(-bound, bound), conductor) + i * rng.randint(-bound, bound)
                   for _ in range(4)]
        p, q, r, s = entries
        if not (p * s - q * r).is_zero():
            out.append([[p, q], [r, s]])
    return out


def gaussian_lift(spec: GroupSpec) -> GroupSpec:
    """The same group over a field containing i."""
    n = spec.conductor
    if n % 4 == 0:
        return spec
    return spec.lift(n * 4 // gcd(n, 4))


def verify_conjugated(
    spec: GroupSpec,
    count: int,
    seed: int = 0,
    suites: Optional[Sequence[str]] = None,
) -> List[Tuple[int, List[IdentityResult]]]:
    """Re-run the suites under the action conjugated by ``count`` random matrices."""
    lifted = gaussian_lift(spec)
    base = operator_table(lifted)
    runs = []
    for index, matrix in enumerate(random_conjugators(count, lifted.conductor, seed)):
        results = verify_identity_suite(lifted, suites, base.conjugated(matrix))
        runs.append((index, results))
    return runs
