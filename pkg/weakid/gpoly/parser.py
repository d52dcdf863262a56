"""
Text syntax for G-polynomials

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor (['*'] factor)*
    factor  := primary ['^' INT]
    primary := INT ['/' INT] | 'w' | 'x'INT | NAME '(' 'x'INT ')'
             | '(' expr ')' | '[' expr ',' expr ']' | '-' factor

``w`` is the primitive root zeta_N of the active conductor; ``pi0``/``pi1`` expand to
``2*e0``/``2*e1`` for Zn:2.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from ..errors import ParseError, UnknownOperatorError
from ..groups import GroupSpec, OperatorTable, operator_table
from ..arith import CycNum
from .terms import GPolynomial, commutator

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<var>x(?P<varidx>\d+))"
    r"|(?P<app>(?P<name>[a-z]+(?:-?\d+)?(?:\^-?\d+)?)\(\s*x(?P<appvar>\d+)\s*\))"
    r"|(?P<w>w)(?![A-Za-z0-9(])"
    r"|(?P<num>\d+)"
    r"|(?P<sym>[-+*/^()\[\],])"
)

_STARTS_FACTOR = {"num", "app", "var", "w", "(", "["}


@dataclass
class Token:
    kind: str
    text: str
    position: int
    name: str = ""
    var: int = 0


def tokenize(text: str) -> List[Token]:
    text = text.replace("−", "-")
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"Unexpected character {text[pos]!r}", pos)
        if m.group("ws"):
            pass
        elif m.group("app"):
            tokens.append(Token("app", m.group("app"), pos, name=m.group("name"), var=int(m.group("appvar"))))
        elif m.group("var"):
            tokens.append(Token("var", m.group("var"), pos, var=int(m.group("varidx"))))
        elif m.group("w"):
            tokens.append(Token("w", "w", pos))
        elif m.group("num"):
            tokens.append(Token("num", m.group("num"), pos))
        else:
            sym = m.group("sym")
            tokens.append(Token(sym, sym, pos))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, table: OperatorTable):
        self.text = text
        self.table = table
        self.spec = table.spec
        self.conductor = table.conductor
        self.tokens = tokenize(text)
        self.index = 0

    def peek(self) -> Optional[Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def take(self, kind: Optional[str] = None) -> Token:
        token = self.peek()
        if token is None:
            raise ParseError(f"Unexpected end of input{f', expected {kind!r}' if kind else ''}", len(self.text))
        if kind is not None and token.kind != kind:
            raise ParseError(f"Expected {kind!r}, found {token.text!r}", token.position)
        self.index += 1
        return token

    def parse(self) -> GPolynomial:
        if not self.tokens:
            raise ParseError("Empty expression", 0)
        result = self.expr()
        token = self.peek()
        if token is not None:
            raise ParseError(f"Unexpected {token.text!r}", token.position)
        return result

    def expr(self) -> GPolynomial:
        sign = 1
        token = self.peek()
        if token is not None and token.kind in "+-":
            self.take()
            sign = -1 if token.kind == "-" else 1
        result = self.term().scale(sign)
        while True:
            token = self.peek()
            if token is None or token.kind not in ("+", "-"):
                return result
            self.take()
            part = self.term()
            result = result + part if token.kind == "+" else result - part

    def term(self) -> GPolynomial:
        result = self.factor()
        while True:
            token = self.peek()
            if token is None:
                return result
            if token.kind == "*":
                self.take()
                result = result * self.factor()
            elif token.kind in _STARTS_FACTOR:
                result = result * self.factor()
            else:
                return result

    def factor(self) -> GPolynomial:
        base = self.primary()
        token = self.peek()
        if token is not None and token.kind == "^":
            self.take()
            exponent = self.take("num")
            base = base ** int(exponent.text)
        return base

    def primary(self) -> GPolynomial:
        token = self.peek()
        if token is None:
            raise ParseError("Unexpected end of input", len(self.text))
        if token.kind == "num":
            self.take()
            value = Fraction(int(token.text))
            nxt = self.peek()
            if nxt is not None and nxt.kind == "/":
                self.take()
                den = self.take("num")
                if int(den.text) == 0:
                    raise ParseError("Division by zero", den.position)
                value = value / int(den.text)
            return GPolynomial.constant(CycNum.from_rational(value, self.conductor), self.conductor)
        if token.kind == "w":
            self.take()
            return GPolynomial.constant(CycNum.zeta(self.conductor), self.conductor)
        if token.kind == "var":
            self.take()
            self._check_var(token)
            return GPolynomial.letter("id", token.var, self.conductor)
        if token.kind == "app":
            self.take()
            self._check_var(token)
            return self.application(token)
        if token.kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        if token.kind == "[":
            self.take()
            left = self.expr()
            self.take(",")
            right = self.expr()
            self.take("]")
            return commutator(left, right)
        if token.kind == "-":
            self.take()
            return -self.factor()
        raise ParseError(f"Unexpected {token.text!r}", token.position)

    def _check_var(self, token: Token) -> None:
        if token.var < 1:
            raise ParseError("Variable indices start at 1", token.position)

    def application(self, token: Token) -> GPolynomial:
        name = token.name
        if name in ("pi0", "pi1"):
            if not (self.spec.is_cyclic and self.spec.n == 2):
                raise UnknownOperatorError(f"'{name}' is defined for Zn:2 only", token.position)
            letter = "e0" if name == "pi0" else "e1"
            return GPolynomial.letter(letter, token.var, self.conductor).scale(2)
        try:
            canonical = self.table.canonical(name)
        except UnknownOperatorError as e:
            raise UnknownOperatorError(str(e), token.position) from e
        return GPolynomial.letter(canonical, token.var, self.conductor)


def parse(text: str, spec: GroupSpec, table: Optional[OperatorTable] = None) -> GPolynomial:
    """Parse an expression into a G-polynomial over the group's conductor."""
    return _Parser(text, table or operator_table(spec)).parse()
