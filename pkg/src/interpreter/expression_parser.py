"""
Expression Parser
Recursive-descent parser for series and realization-field expressions and
for matrix literals `m11,m12;m21,m22`.

    expr  := term (('+' | '-') term)*
    term  := unary (('*' | '/') unary)*
    unary := ('+' | '-') unary | power
    power := atom ('^' signed_int)?
    atom  := number | 'i' | 't' | 'tau'N | 's'N | '(' expr ')' | 'O' '(' expr ')'
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Union

from config.engine import EngineConfig
from errors import DomainError, ParseError, PreconditionError
from hahn.element import HahnElement, generator
from series.coefficient import Coefficient
from series.laurent import LaurentSeries
from sl2flow.matrices import Matrix2, has_unit_determinant

logger = logging.getLogger(__name__)

TOKEN_PATTERN = re.compile(r"(?P<number>\d+(?:\.\d+)?)"
                           r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
                           r"|(?P<op>[-+*/^()])")
GENERATOR_PATTERN = re.compile(r"^(tau|s)(\d+)$")
LEVEL_PATTERN = re.compile(r"\bs\d+\b")

Parsed = Union[LaurentSeries, HahnElement]


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str, offset: int = 0) -> List[Token]:
    tokens = []
    position = 0
    while True:
        while position < len(text) and text[position].isspace():
            position += 1
        if position >= len(text):
            break
        match = TOKEN_PATTERN.match(text, position)
        if not match:
            raise ParseError(f"unexpected character {text[position]!r}", offset + position)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), offset + position))
        position = match.end()
    tokens.append(Token("end", "", offset + len(text)))
    return tokens


class ExpressionParser:
    """Parses one expression into a LaurentSeries, or a HahnElement when a level generator occurs"""

    def __init__(self, config: Optional[EngineConfig] = None):
        self.config = config or EngineConfig()
        self._tokens: List[Token] = []
        self._index = 0
        self._hahn = False

    # -- public entry points ----------------------------------------------------

    def parse_series(self, text: str, offset: int = 0) -> LaurentSeries:
        value = self._parse(text, offset, hahn=None)
        if isinstance(value, HahnElement):
            raise ParseError("level generators are not allowed in a series over M", offset)
        return value

    def parse_element(self, text: str, offset: int = 0) -> HahnElement:
        value = self._parse(text, offset, hahn=True)
        return value

    def parse_matrix(self, text: str) -> Matrix2:
        rows = text.split(";")
        if len(rows) != 2:
            raise ParseError("a matrix literal needs two rows separated by ';'", None)
        entries = []
        offset = 0
        for row in rows:
            cells = row.split(",")
            if len(cells) != 2:
                raise ParseError("each matrix row needs two entries separated by ','", offset)
            for cell in cells:
                entries.append((cell, offset))
                offset += len(cell) + 1
        hahn = any(LEVEL_PATTERN.search(cell) for cell, _ in entries)
        values = [self._parse(cell, at, hahn=hahn or None) for cell, at in entries]
        g = Matrix2(*values)
        if not has_unit_determinant(g, self.config.precision):
            raise ParseError(f"matrix determinant is {g.determinant()}, not 1")
        return g

    # -- recursive descent ------------------------------------------------------

    def _parse(self, text: str, offset: int, hahn: Optional[bool]) -> Parsed:
        self._tokens = tokenize(text, offset)
        self._index = 0
        self._hahn = bool(hahn) or bool(LEVEL_PATTERN.search(text))
        if self._peek().kind == "end":
            raise ParseError("empty expression", self._peek().position)
        value = self._expr()
        if self._peek().kind != "end":
            raise ParseError(f"unexpected {self._peek().text!r}", self._peek().position)
        return value

    def _peek(self) -> Token:
        return self._tokens[self._index]

    def _advance(self) -> Token:
        token = self._tokens[self._index]
        self._index += 1
        return token

    def _expect(self, text: str) -> Token:
        token = self._advance()
        if token.text != text:
            raise ParseError(f"expected {text!r}, found {token.text or 'end of input'!r}",
                             token.position)
        return token

    def _expr(self) -> Parsed:
        value = self._term()
        while self._peek().text in ("+", "-"):
            op = self._advance().text
            right = self._term()
            value = value + right if op == "+" else value - right
        return value

    def _term(self) -> Parsed:
        value = self._unary()
        while self._peek().text in ("*", "/"):
            token = self._advance()
            right = self._unary()
            if token.text == "*":
                value = value * right
                continue
            try:
                value = value / right
            except DomainError:
                raise ParseError("division by zero", token.position)
        return value

    def _unary(self) -> Parsed:
        if self._peek().text == "-":
            self._advance()
            return -self._unary()
        if self._peek().text == "+":
            self._advance()
            return self._unary()
        return self._power()

    def _power(self) -> Parsed:
        base = self._atom()
        if self._peek().text != "^":
            return base
        self._advance()
        sign = 1
        if self._peek().text in ("+", "-"):
            sign = -1 if self._advance().text == "-" else 1
        token = self._advance()
        if token.kind != "number" or "." in token.text:
            raise ParseError("exponent must be an integer", token.position)
        try:
            return base ** (sign * int(token.text))
        except DomainError:
            raise ParseError("negative power of zero", token.position)

    def _atom(self) -> Parsed:
        token = self._advance()
        if token.kind == "number":
            return self._constant(Fraction(token.text))
        if token.text == "(":
            value = self._expr()
            self._expect(")")
            return value
        if token.kind == "name":
            return self._name(token)
        raise ParseError(f"unexpected {token.text or 'end of input'!r}", token.position)

    def _name(self, token: Token) -> Parsed:
        name = token.text
        if name == "O" and self._peek().text == "(":
            # truncation marker: O(t^N) contributes nothing
            self._advance()
            self._expr()
            self._expect(")")
            return self._constant(0)
        if name == "i":
            return self._constant(Coefficient.imaginary_unit())
        if name == "t":
            return self._monomial(1, 1)
        match = GENERATOR_PATTERN.match(name)
        if not match:
            raise ParseError(f"unknown name {name!r}", token.position)
        index = int(match.group(2))
        try:
            if match.group(1) == "tau":
                return self._constant(Coefficient.tau(index, self.config.transcendentals))
            return generator(index, 1, levels=self.config.levels,
                             transcendentals=self.config.transcendentals,
                             horizon=self.config.horizon)
        except PreconditionError as e:
            raise ParseError(str(e), token.position)

    def _constant(self, value) -> Parsed:
        return self._monomial(value, 0)

    def _monomial(self, coefficient, exponent: int) -> Parsed:
        context = {"transcendentals": self.config.transcendentals, "horizon": self.config.horizon}
        if self._hahn:
            exponents = (0,) * self.config.levels + (exponent,)
            return HahnElement.monomial(coefficient, exponents, levels=self.config.levels, **context)
        return LaurentSeries.monomial(coefficient, exponent, **context)


def parse_series(text: str, config: Optional[EngineConfig] = None) -> LaurentSeries:
    return ExpressionParser(config).parse_series(text)


def parse_element(text: str, config: Optional[EngineConfig] = None) -> HahnElement:
    return ExpressionParser(config).parse_element(text)


def parse_matrix(text: str, config: Optional[EngineConfig] = None) -> Matrix2:
    return ExpressionParser(config).parse_matrix(text)
