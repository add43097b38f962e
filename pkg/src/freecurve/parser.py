"""Recursive-descent parser for polynomial expressions in x, y, z.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := ['+' | '-'] factor (('*' factor) | factor)*
    factor := base ['^' integer]
    base   := integer ['/' integer] | 'x' | 'y' | 'z' | '(' expr ')'

A factor may follow another without '*' only when it starts with a variable
or '(' ("xyz", "2x^2y", "x(y+z)").  Every error is a :class:`ParseDiagnostic`
carrying the byte offset of the offending token.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import TriPoly

# bound on the degree of any intermediate product; keeps hostile input cheap
MAX_DEGREE = 200
MAX_EXPONENT = 1000

_SINGLE = {"+": "plus", "-": "minus", "*": "star", "^": "caret", "(": "lparen", ")": "rparen", "/": "slash"}
_SHOW = {
    "number": "number", "variable": "variable", "plus": "'+'", "minus": "'-'", "star": "'*'",
    "caret": "'^'", "lparen": "'('", "rparen": "')'", "slash": "'/'", "end": "end of input",
}


@dataclass(frozen=True)
class ExprToken:
    kind: str
    payload: object
    position: int  # byte offset


class ParseDiagnostic(ValueError):
    def __init__(self, message: str, position: int, expected=()):
        self.message = message
        self.position = position
        self.expected = frozenset(expected)
        exp = ", ".join(sorted(_SHOW.get(e, e) for e in self.expected))
        super().__init__(f"{message} at byte {position}" + (f" (expected {exp})" if exp else ""))


def tokenize(text: str) -> list:
    tokens = []
    offset = 0  # byte offset of text[i]
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            offset += len(ch.encode())
            i += 1
            continue
        if ch.isdigit() and ch.isascii():
            j = i
            while j < n and text[j].isdigit() and text[j].isascii():
                j += 1
            tokens.append(ExprToken("number", int(text[i:j]), offset))
            offset += j - i
            i = j
            continue
        if ch in "xyz":
            tokens.append(ExprToken("variable", ch, offset))
        elif ch in _SINGLE:
            tokens.append(ExprToken(_SINGLE[ch], ch, offset))
        else:
            raise ParseDiagnostic(f"unexpected character {ch!r}", offset)
        offset += len(ch.encode())
        i += 1
    tokens.append(ExprToken("end", None, len(text.encode())))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    @property
    def tok(self) -> ExprToken:
        return self.toks[self.i]

    def advance(self) -> ExprToken:
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, message, expected=()):
        raise ParseDiagnostic(message, self.tok.position, expected)

    def expr(self) -> TriPoly:
        total = self.term()
        while self.tok.kind in ("plus", "minus"):
            op = self.advance().kind
            t = self.term()
            total = total + t if op == "plus" else total - t
        return total

    def term(self) -> TriPoly:
        sign = 1
        if self.tok.kind in ("plus", "minus"):
            sign = -1 if self.advance().kind == "minus" else 1
        prod = self.factor()
        while True:
            if self.tok.kind == "star":
                self.advance()
            elif self.tok.kind not in ("variable", "lparen"):
                break
            pos = self.tok.position
            f = self.factor()
            if prod.total_degree() + f.total_degree() > MAX_DEGREE:
                raise ParseDiagnostic(f"degree exceeds {MAX_DEGREE}", pos)
            prod = prod * f
        return -prod if sign < 0 else prod

    def factor(self) -> TriPoly:
        base = self.base()
        if self.tok.kind == "caret":
            self.advance()
            if self.tok.kind == "minus":
                self.fail("negative exponent", {"number"})
            if self.tok.kind != "number":
                self.fail("exponent must be a non-negative integer", {"number"})
            e = self.tok.payload
            if e > MAX_EXPONENT or base.total_degree() * e > MAX_DEGREE:
                self.fail(f"exponent too large (degree cap {MAX_DEGREE})")
            self.advance()
            base = base**e
        return base

    def base(self) -> TriPoly:
        t = self.tok
        if t.kind == "number":
            self.advance()
            value = t.payload
            if self.tok.kind == "slash":
                self.advance()
                if self.tok.kind != "number":
                    self.fail("division by a non-literal", {"number"})
                den = self.tok
                if den.payload == 0:
                    self.fail("zero denominator")
                self.advance()
                value = Fraction(value, den.payload)
            return TriPoly.const(value)
        if t.kind == "variable":
            self.advance()
            if self.tok.kind == "slash":
                self.fail("division by a non-literal")
            return TriPoly.var(t.payload)
        if t.kind == "lparen":
            self.advance()
            inner = self.expr()
            if self.tok.kind != "rparen":
                self.fail("unbalanced parenthesis", {"rparen", "plus", "minus", "star", "caret", "variable", "lparen"})
            self.advance()
            if self.tok.kind == "slash":
                self.fail("division by a non-literal")
            return inner
        self.fail("expected a number, variable or '('", {"number", "variable", "lparen"})


def parse_expression(text: str, require_homogeneous: bool = False) -> TriPoly:
    """Parse ``text`` into an expanded TriPoly; raise ParseDiagnostic on error."""
    parser = _Parser(tokenize(text))
    poly = parser.expr()
    if parser.tok.kind != "end":
        parser.fail(
            f"unexpected {_SHOW[parser.tok.kind]}",
            {"plus", "minus", "star", "caret", "variable", "lparen", "end"},
        )
    if require_homogeneous and not poly.is_homogeneous():
        raise ParseDiagnostic("polynomial is not homogeneous", 0)
    return poly
