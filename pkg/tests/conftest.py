"""
Shared fixtures for the weakid test suite
"""

import pytest
import sympy
from click.testing import CliRunner

from weakid.arith import MPoly
from weakid.arith.mpoly import VAR_NAMES
from weakid.groups import GroupSpec


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: certificates at the full acceptance degrees; deselect with -m \"not slow\"")


def to_sympy(p: MPoly) -> sympy.Expr:
    """Convert an MPoly with rational coefficients into a sympy expression."""
    total = sympy.Integer(0)
    for m, c in p.items():
        term = sympy.Rational(c.rational().numerator, c.rational().denominator)
        for (kind, index), exp in m:
            term *= sympy.Symbol(f"{VAR_NAMES[kind]}{index}") ** exp
        total += term
    return sympy.expand(total)


@pytest.fixture
def zn3() -> GroupSpec:
    return GroupSpec.parse("Zn:3")


@pytest.fixture
def zn2() -> GroupSpec:
    return GroupSpec.parse("Zn:2")


@pytest.fixture
def dn4() -> GroupSpec:
    return GroupSpec.parse("Dn:4")


@pytest.fixture
def a4() -> GroupSpec:
    return GroupSpec.parse("A4")


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()
