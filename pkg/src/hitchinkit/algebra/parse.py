"""Recursive-descent parser for the polynomial string grammar.

Grammar (whitespace insignificant)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" integer)?
    atom   := number | name | "(" expr ")"

Division is only allowed by nonzero constants, so ``p/q`` literals and
``z^3/6`` both parse.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable

from .poly import PolynomialError, RationalPoly

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


class PolySyntaxError(PolynomialError):
    """Malformed polynomial string."""


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", num))
        elif name is not None:
            tokens.append(("name", name))
        elif op is not None:
            if op not in "+-*/^()":
                raise PolySyntaxError(f"unexpected character {op!r} in {text!r}")
            tokens.append(("op", op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, variables: tuple[str, ...]):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.vars = variables

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val = self.take()
        if val != value:
            raise PolySyntaxError(f"expected {value!r} in {self.text!r}")

    def parse(self) -> RationalPoly:
        if not self.tokens:
            raise PolySyntaxError("empty polynomial string")
        p = self.expr()
        if self.i != len(self.tokens):
            raise PolySyntaxError(f"trailing input in {self.text!r}")
        return p

    def expr(self) -> RationalPoly:
        p = self.term()
        while self.peek()[1] in ("+", "-"):
            _, op = self.take()
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> RationalPoly:
        p = self.unary()
        while self.peek()[1] in ("*", "/"):
            _, op = self.take()
            q = self.unary()
            if op == "*":
                p = p * q
            else:
                if not q.is_constant() or q.is_zero():
                    raise PolySyntaxError(f"division by a non-constant or zero in {self.text!r}")
                p = p / q.constant_value()
        return p

    def unary(self) -> RationalPoly:
        if self.peek()[1] == "-":
            self.take()
            return -self.unary()
        if self.peek()[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> RationalPoly:
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            kind, val = self.take()
            if kind != "num" or "." in val:
                raise PolySyntaxError(f"exponent must be a non-negative integer in {self.text!r}")
            return base ** int(val)
        return base

    def atom(self) -> RationalPoly:
        kind, val = self.take()
        if kind == "num":
            return RationalPoly.constant(Fraction(val), self.vars)
        if kind == "name":
            if val not in self.vars:
                self.vars = self.vars + (val,)
            return RationalPoly.variable(val, self.vars)
        if val == "(":
            p = self.expr()
            self.expect(")")
            return p
        raise PolySyntaxError(f"unexpected token {val!r} in {self.text!r}")


def parse_poly(text: str, variables: Iterable[str] | None = None) -> RationalPoly:
    """Parse ``text``.

    With ``variables`` given, the result uses exactly that list (unknown
    names are an error).  Otherwise variables are ordered by first appearance.
    """
    fixed = tuple(variables) if variables is not None else None
    parser = _Parser(text, fixed or ())
    p = parser.parse()
    if fixed is not None:
        if parser.vars != fixed:
            extra = [v for v in parser.vars if v not in fixed]
            raise PolySyntaxError(f"unknown variables {extra} (allowed: {list(fixed)})")
        return p.with_variables(fixed)
    return p.with_variables(parser.vars)
