"""Polynomial expressions: tokenizer, syntax tree, parser, printer, evaluator.

Shared by the script language and by code that wants to write polynomials as
text.  Errors carry a line/column position and the set of tokens that would
have been accepted there.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .poly import Polynomial, PolyRing

SYMBOLS = "+-*/^(),;=[]|"


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int, expected: frozenset = frozenset()):
        self.message = message
        self.line = line
        self.col = col
        self.expected = expected
        exp = ""
        if expected:
            exp = " (expected " + " or ".join(sorted(expected)) + ")"
        super().__init__(f"{line}:{col}: {message}{exp}")


@dataclass(frozen=True)
class Token:
    kind: str  # "ident", "int", "sym", "eof"
    text: str
    line: int
    col: int

    def describe(self) -> str:
        if self.kind == "eof":
            return "end of input"
        return repr(self.text)


def tokenize(src: str) -> list[Token]:
    out = []
    i, line, col = 0, 1, 1
    n = len(src)
    while i < n:
        ch = src[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and src[i] != "\n":
                i += 1
            continue
        start = col
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            out.append(Token("int", src[i:j], line, start))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] in "_'"):
                j += 1
            out.append(Token("ident", src[i:j], line, start))
            col += j - i
            i = j
            continue
        if ch in SYMBOLS:
            out.append(Token("sym", ch, line, start))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    out.append(Token("eof", "", line, col))
    return out


# -- syntax tree -----------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Name:
    id: str


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str  # + - * /
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def _prec(node) -> int:
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return 1
    if isinstance(node, Pow):
        return 3
    return 4


def to_text(node) -> str:
    """Canonical text; parsing it back gives an equal tree."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Name):
        return node.id
    if isinstance(node, Pow):
        base = to_text(node.base)
        if _prec(node.base) < 4:
            base = f"({base})"
        return f"{base}^{node.exp}"
    if isinstance(node, Neg):
        inner = to_text(node.arg)
        if _prec(node.arg) < 2:
            inner = f"({inner})"
        return "-" + inner
    if isinstance(node, BinOp):
        p = _PREC[node.op]
        left = to_text(node.left)
        if _prec(node.left) < p or (isinstance(node.left, Neg) and p > 1):
            left = f"({left})"
        right = to_text(node.right)
        if _prec(node.right) <= p or isinstance(node.right, Neg):
            right = f"({right})"
        if node.op in "+-":
            return f"{left} {node.op} {right}"
        return f"{left}{node.op}{right}"
    raise TypeError(f"not an expression node: {node!r}")


class TokenStream:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.pos = 0

    @property
    def peek(self) -> Token:
        return self.toks[self.pos]

    def at(self, text: str) -> bool:
        t = self.peek
        return t.kind == "sym" and t.text == text

    def at_word(self, word: str) -> bool:
        t = self.peek
        return t.kind == "ident" and t.text == word

    def advance(self) -> Token:
        t = self.toks[self.pos]
        if t.kind != "eof":
            self.pos += 1
        return t

    def fail(self, expected, message: str | None = None):
        t = self.peek
        raise ParseError(message or f"unexpected {t.describe()}", t.line, t.col,
                         frozenset(expected))

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail({repr(text)})
        return self.advance()

    def expect_word(self, word: str) -> Token:
        if not self.at_word(word):
            self.fail({repr(word)})
        return self.advance()

    def ident(self) -> Token:
        if self.peek.kind != "ident":
            self.fail({"identifier"})
        return self.advance()

    def integer(self) -> int:
        if self.peek.kind != "int":
            self.fail({"integer"})
        return int(self.advance().text)


_ATOM_START = {"identifier", "integer", "'('"}


def parse_expr(ts: TokenStream):
    """expr := ['-'|'+'] term (('+'|'-') term)*"""
    if ts.at("-"):
        ts.advance()
        node = Neg(_term(ts))
    else:
        if ts.at("+"):
            ts.advance()
        node = _term(ts)
    while ts.at("+") or ts.at("-"):
        op = ts.advance().text
        node = BinOp(op, node, _term(ts))
    return node


def _term(ts: TokenStream):
    node = _factor(ts)
    while ts.at("*") or ts.at("/"):
        op = ts.advance().text
        node = BinOp(op, node, _factor(ts))
    return node


def _factor(ts: TokenStream):
    node = _atom(ts)
    if ts.at("^"):
        ts.advance()
        node = Pow(node, ts.integer())
    return node


def _atom(ts: TokenStream):
    t = ts.peek
    if t.kind == "int":
        ts.advance()
        return Num(int(t.text))
    if t.kind == "ident":
        ts.advance()
        return Name(t.text)
    if ts.at("("):
        ts.advance()
        node = parse_expr(ts)
        ts.expect(")")
        return node
    ts.fail(_ATOM_START)


class EvalError(ValueError):
    pass


def evaluate(node, ring: PolyRing, env: Mapping[str, Polynomial] | None = None) -> Polynomial:
    env = env or {}
    if isinstance(node, Num):
        return ring.constant(node.value)
    if isinstance(node, Name):
        if node.id in env:
            v = env[node.id]
            if not isinstance(v, Polynomial):
                raise EvalError(f"{node.id!r} is not a polynomial")
            return v
        try:
            return ring.var(node.id)
        except KeyError:
            raise EvalError(f"unbound identifier {node.id!r}") from None
    if isinstance(node, Neg):
        return -evaluate(node.arg, ring, env)
    if isinstance(node, Pow):
        return evaluate(node.base, ring, env) ** node.exp
    if isinstance(node, BinOp):
        a = evaluate(node.left, ring, env)
        b = evaluate(node.right, ring, env)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if not b.is_constant() or not b:
            raise EvalError("division is only by nonzero constants")
        c = b.lc
        return a.scale(ring.field.inv(c))
    raise TypeError(f"not an expression node: {node!r}")


def parse_poly(ring: PolyRing, text: str, env: Mapping[str, Polynomial] | None = None) -> Polynomial:
    ts = TokenStream(tokenize(text))
    node = parse_expr(ts)
    if ts.peek.kind != "eof":
        ts.fail({"operator", "end of input"})
    return evaluate(node, ring, env)


def parse_polys(ring: PolyRing, text: str) -> list[Polynomial]:
    """Comma-separated list of polynomials."""
    ts = TokenStream(tokenize(text))
    out = [evaluate(parse_expr(ts), ring)]
    while ts.at(","):
        ts.advance()
        out.append(evaluate(parse_expr(ts), ring))
    if ts.peek.kind != "eof":
        ts.fail({"','", "end of input"})
    return out


def coefficient_text(c) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(c)
