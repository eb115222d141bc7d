"""Reader and printer for polynomial expressions.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := ('+' | '-') factor | power
    power  := atom ('^' INT)?
    atom   := NUMBER | NAME | '(' expr ')'
    NUMBER := INT | INT '/' INT

Whitespace is ignored and multiplication must be explicit.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, NamedTuple, Sequence

from .poly import BiPoly, UniPoly, format_rational


class PolySyntaxError(ValueError):
    """Malformed polynomial text.  ``pos`` is a 0-based character offset."""

    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        self.line = text.count("\n", 0, pos) + 1
        self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.reason = message
        super().__init__(f"{message} at line {self.line}, column {self.column}")


class _Tok(NamedTuple):
    kind: str
    value: object
    pos: int


_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()])"
)


def _tokenize(text: str) -> List[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind == "num":
            raw = m.group().replace(" ", "")
            if "/" in raw:
                num, den = raw.split("/")
                if int(den) == 0:
                    raise PolySyntaxError("zero denominator", text, pos)
                toks.append(_Tok("num", Fraction(int(num), int(den)), pos))
            else:
                toks.append(_Tok("num", int(raw), pos))
        elif kind == "name":
            toks.append(_Tok("name", m.group(), pos))
        elif kind == "op":
            toks.append(_Tok(m.group(), None, pos))
        pos = m.end()
    toks.append(_Tok("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.variables = tuple(variables)

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, tok: _Tok | None = None):
        tok = tok or self.peek()
        raise PolySyntaxError(message, self.text, tok.pos)

    def parse(self) -> BiPoly:
        if self.peek().kind == "end":
            self.fail("empty expression")
        p = self.expr()
        if self.peek().kind != "end":
            self.fail(f"unexpected {self._describe(self.peek())}")
        return p

    def expr(self) -> BiPoly:
        p = self.term()
        while self.peek().kind in "+-":
            op = self.take().kind
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> BiPoly:
        p = self.factor()
        while self.peek().kind == "*":
            self.take()
            p = p * self.factor()
        return p

    def factor(self) -> BiPoly:
        tok = self.peek()
        if tok.kind in ("+", "-"):
            self.take()
            inner = self.factor()
            return -inner if tok.kind == "-" else inner
        return self.power()

    def power(self) -> BiPoly:
        base = self.atom()
        if self.peek().kind == "^":
            self.take()
            tok = self.peek()
            if tok.kind == "-":
                self.fail("negative exponent", tok)
            if tok.kind != "num" or not isinstance(tok.value, int):
                self.fail("exponent must be a nonnegative integer", tok)
            self.take()
            if self.peek().kind == "^":
                self.fail("chained exponent; use parentheses")
            return base**tok.value
        return base

    def atom(self) -> BiPoly:
        tok = self.take()
        if tok.kind == "num":
            return BiPoly.const(tok.value)
        if tok.kind == "name":
            if tok.value not in self.variables:
                self.fail(f"unknown variable {tok.value!r}", tok)
            idx = self.variables.index(tok.value)
            return BiPoly.monomial(1, 0) if idx == 0 else BiPoly.monomial(0, 1)
        if tok.kind == "(":
            p = self.expr()
            if self.peek().kind != ")":
                self.fail("expected ')'")
            self.take()
            return p
        self.fail(f"unexpected {self._describe(tok)}", tok)

    @staticmethod
    def _describe(tok: _Tok) -> str:
        if tok.kind == "end":
            return "end of input"
        if tok.kind in ("num", "name"):
            return f"{tok.kind} {tok.value}"
        return f"{tok.kind!r}"


def parse_poly(text: str, variables: Sequence[str] = ("x", "y")) -> BiPoly:
    """Parse a polynomial in two variables.

    >>> parse_poly("x^2*y - 3/4").terms == {(2, 1): 1, (0, 0): Fraction(-3, 4)}
    True
    """
    if len(variables) != 2 or variables[0] == variables[1]:
        raise ValueError("need two distinct variable names")
    return _Parser(text, variables).parse()


def parse_unipoly(text: str, var: str = "t") -> UniPoly:
    p = _Parser(text, (var, "\0")).parse()
    return UniPoly(p.coeff(i, 0) for i in range(int(max(p.degree, -1)) + 1))


def _term_text(c, mono: str) -> str:
    mag = abs(c)
    if not mono:
        return format_rational(mag)
    if mag == 1:
        return mono
    return f"{format_rational(mag)}*{mono}"


def _join(terms) -> str:
    if not terms:
        return "0"
    parts = []
    for k, (c, mono) in enumerate(terms):
        body = _term_text(c, mono)
        if k == 0:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts)


def _power(name: str, e: int) -> str:
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{e}"


def format_poly(p: BiPoly, variables: Sequence[str] = ("x", "y")) -> str:
    """Graded-lex printer; the output parses back to ``p``."""
    vx, vy = variables
    terms = []
    for (i, j), c in p.sorted_terms():
        mono = "*".join(s for s in (_power(vx, i), _power(vy, j)) if s)
        terms.append((c, mono))
    return _join(terms)


def format_unipoly(u: UniPoly, var: str = "t") -> str:
    terms = [(c, _power(var, i)) for i, c in reversed(list(enumerate(u.coeffs))) if c]
    return _join(terms)
