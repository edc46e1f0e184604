"""Recursive-descent parser for the ASCII polynomial grammar.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := primary ('*'? primary)*
    primary:= uint ('/' uint)? | ident ('^' uint)? | '(' expr ')'

Whitespace is insignificant. Integer literals reduce into the coefficient
field (so "1/2" over F_5 means 1 * inv(2) = 3).
"""

from __future__ import annotations

from .errors import ParseError
from .poly import Polynomial, Ring

_SYMBOLS = "+-*/^()"


class _Token:
    __slots__ = ("kind", "value", "line", "col")

    def __init__(self, kind, value, line, col):
        self.kind = kind
        self.value = value
        self.line = line
        self.col = col


def _tokenize(text: str):
    tokens = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("INT", int(text[i:j]), line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("IDENT", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append(_Token(ch, ch, line, col))
            col += 1
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("END", None, line, col))
    return tokens


class _Parser:
    def __init__(self, tokens, ring: Ring):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.value!r}", tok.line, tok.col)
        return self.advance()

    def parse(self) -> Polynomial:
        poly = self.expr()
        tok = self.peek()
        if tok.kind != "END":
            raise ParseError(f"unexpected {tok.value!r}", tok.line, tok.col)
        return poly

    def expr(self) -> Polynomial:
        negate = False
        if self.peek().kind in ("+", "-"):
            negate = self.advance().kind == "-"
        poly = self.term()
        if negate:
            poly = -poly
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.term()
            poly = poly - rhs if op == "-" else poly + rhs
        return poly

    def term(self) -> Polynomial:
        poly = self.primary()
        while True:
            tok = self.peek()
            if tok.kind == "*":
                self.advance()
                poly = poly * self.primary()
            elif tok.kind in ("INT", "IDENT", "("):
                poly = poly * self.primary()
            else:
                return poly

    def primary(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "INT":
            self.advance()
            num = tok.value
            den = 1
            if self.peek().kind == "/":
                self.advance()
                den_tok = self.expect("INT")
                den = den_tok.value
            return self._coefficient(num, den, tok)
        if tok.kind == "IDENT":
            self.advance()
            if tok.value not in self.ring._var_index:
                raise ParseError(f"unknown variable {tok.value!r}", tok.line, tok.col)
            index = self.ring.var_index(tok.value)
            exponent = 1
            if self.peek().kind == "^":
                self.advance()
                exp_tok = self.peek()
                if exp_tok.kind == "-":
                    raise ParseError("negative exponent", exp_tok.line, exp_tok.col)
                exponent = self.expect("INT").value
            exps = tuple(exponent if j == index else 0 for j in range(self.ring.nvars))
            return self.ring.monomial(exps)
        if tok.kind == "(":
            self.advance()
            poly = self.expr()
            self.expect(")")
            return poly
        raise ParseError(f"expected a term, found {tok.value!r}", tok.line, tok.col)

    def _coefficient(self, num: int, den: int, tok: _Token) -> Polynomial:
        field = self.ring.field
        if den == 0:
            raise ParseError("zero denominator in coefficient", tok.line, tok.col)
        try:
            value = field.div(field.element(num), field.element(den))
        except ZeroDivisionError:
            raise ParseError(
                f"denominator {den} is zero in {field.name}", tok.line, tok.col
            ) from None
        exps = (0,) * self.ring.nvars
        return self.ring.monomial(exps, value)


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    return _Parser(_tokenize(text), ring).parse()
