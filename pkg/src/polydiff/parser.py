"""Text grammar for polynomial expressions and the canonical formatter.

Grammar (implicit multiplication is rejected on purpose, it is ambiguous
with multi-character identifiers):

    input    := vector | expr
    vector   := "[" expr ("," expr)* "]"
    expr     := term (("+" | "-") term)*
    term     := factor ("*" factor)*
    factor   := base ("^" natural)?
    base     := rational | identifier | "(" expr ")" | "-" factor
    rational := integer ("/" positive-integer)?

Identifiers resolve against an explicit declaration (``var_names``) when
given.  Otherwise names of the form x1, x2, ... are auto-indexed (the
variable count is the largest index used); as a convenience a single bare
identifier such as ``x`` or ``t`` denotes a one-variable polynomial.

The formatter emits graded-lexicographic order, largest terms first, and
round-trips: parse(format(P)) == P whenever the variable context matches.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ParseError
from .poly import ScalarPoly, VectorPoly, grlex_key

_TOKEN_RE = re.compile(r"\d+|[A-Za-z_][A-Za-z_0-9]*|[-+*/^()\[\],]")
_AUTO_VAR_RE = re.compile(r"x([1-9][0-9]*)\Z")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "ident", or the operator character itself; "end" at EOF
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[Token]:
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch == "\n":
            line += 1
            col = 1
            pos += 1
            continue
        if ch.isspace():
            col += 1
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if match is None or match.start() != pos:
            raise ParseError(f"unexpected character {ch!r}", line, col)
        lexeme = match.group()
        if lexeme[0].isdigit():
            kind = "int"
        elif lexeme[0].isalpha() or lexeme[0] == "_":
            kind = "ident"
        else:
            kind = lexeme
        tokens.append(Token(kind, lexeme, line, col))
        col += len(lexeme)
        pos += len(lexeme)
    tokens.append(Token("end", "", line, col))
    return tokens


def _resolve_variables(tokens: Sequence[Token], var_names: Sequence[str] | None) -> tuple[dict[str, int], int]:
    if var_names is not None:
        names = list(var_names)
        if len(set(names)) != len(names):
            raise ValueError("declared variable names must be distinct")
        mapping = {name: i for i, name in enumerate(names)}
        for tok in tokens:
            if tok.kind == "ident" and tok.text not in mapping:
                raise ParseError(f"unknown identifier '{tok.text}'", tok.line, tok.col)
        return mapping, len(names)
    indexed: dict[str, int] = {}
    bare: list[Token] = []
    for tok in tokens:
        if tok.kind != "ident":
            continue
        match = _AUTO_VAR_RE.match(tok.text)
        if match:
            indexed[tok.text] = int(match.group(1))
        else:
            bare.append(tok)
    if bare:
        distinct = {tok.text for tok in bare}
        if indexed or len(distinct) > 1:
            tok = bare[0]
            raise ParseError(f"unknown identifier '{tok.text}'", tok.line, tok.col)
        return {bare[0].text: 0}, 1
    nvars = max(indexed.values(), default=0)
    return {name: idx - 1 for name, idx in indexed.items()}, nvars


class _Parser:
    def __init__(self, tokens: list[Token], mapping: dict[str, int], nvars: int):
        self.tokens = tokens
        self.mapping = mapping
        self.nvars = nvars
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str) -> ParseError:
        tok = self.peek()
        return ParseError(message, tok.line, tok.col)

    def parse_input(self) -> VectorPoly:
        if self.peek().kind == "[":
            poly = self.parse_vector()
        else:
            poly = VectorPoly.from_scalar(self.parse_expr())
        if self.peek().kind != "end":
            raise self.fail(f"unexpected trailing input '{self.peek().text}'")
        return poly

    def parse_vector(self) -> VectorPoly:
        self.advance()  # "["
        coords = [self.parse_expr()]
        while self.peek().kind == ",":
            self.advance()
            coords.append(self.parse_expr())
        if self.peek().kind != "]":
            raise self.fail("expected ',' or ']' in vector expression")
        self.advance()
        return VectorPoly(tuple(coords))

    def parse_expr(self) -> ScalarPoly:
        value = self.parse_term()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.parse_term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def parse_term(self) -> ScalarPoly:
        value = self.parse_factor()
        while self.peek().kind == "*":
            self.advance()
            value = value * self.parse_factor()
        return value

    def parse_factor(self) -> ScalarPoly:
        base = self.parse_base()
        if self.peek().kind == "^":
            self.advance()
            if self.peek().kind != "int":
                raise self.fail("exponent must be a natural number")
            exponent = int(self.advance().text)
            base = base**exponent
        return base

    def parse_base(self) -> ScalarPoly:
        tok = self.peek()
        if tok.kind == "int":
            return ScalarPoly.constant(self.nvars, self.parse_rational())
        if tok.kind == "ident":
            self.advance()
            return ScalarPoly.variable(self.mapping[tok.text], self.nvars)
        if tok.kind == "(":
            self.advance()
            inner = self.parse_expr()
            if self.peek().kind != ")":
                raise self.fail("expected ')'")
            self.advance()
            return inner
        if tok.kind == "-":
            self.advance()
            return -self.parse_factor()
        raise self.fail(f"expected a value, found '{tok.text or 'end of input'}'")

    def parse_rational(self) -> Fraction:
        num = int(self.advance().text)
        if self.peek().kind == "/":
            self.advance()
            if self.peek().kind != "int":
                raise self.fail("expected a positive integer denominator")
            den_tok = self.advance()
            den = int(den_tok.text)
            if den == 0:
                raise ParseError("zero denominator", den_tok.line, den_tok.col)
            return Fraction(num, den)
        return Fraction(num)


def parse(text: str, var_names: Sequence[str] | None = None) -> VectorPoly:
    """Parse an expression (or bracketed vector of expressions) to a VectorPoly."""
    tokens = _tokenize(text)
    mapping, nvars = _resolve_variables(tokens, var_names)
    return _Parser(tokens, mapping, nvars).parse_input()


def _format_monomial(exps: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _format_scalar(p: ScalarPoly, names: Sequence[str]) -> str:
    if p.is_zero:
        return "0"
    pieces = []
    for exps, coeff in sorted(p.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True):
        mono = _format_monomial(exps, names)
        mag = abs(coeff)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        pieces.append(("-" if coeff < 0 else "+", body))
    sign, body = pieces[0]
    out = body if sign == "+" else f"-{body}"
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def format_poly(p: VectorPoly, var_names: Sequence[str] | None = None) -> str:
    """Canonical text form: graded-lex descending, exact rational coefficients.

    One-dimensional codomains print bare; higher ones as "[.., ..]".
    """
    names = list(var_names) if var_names is not None else [f"x{i + 1}" for i in range(p.nvars)]
    if len(names) != p.nvars:
        raise ValueError(f"{len(names)} names for {p.nvars} variables")
    bodies = [_format_scalar(c, names) for c in p.coords]
    if len(bodies) == 1:
        return bodies[0]
    return "[" + ", ".join(bodies) + "]"
