"""The script language: one ring declaration, then bindings and commands.

    ring ZZ/32003[x,y,u,v];
    ideal I = x*u, x*v, y*u, y*v;
    pd(I);
    colon(ideal(x*u, y*v), I);

Besides ``ideal`` and ``poly`` bindings there is ``matrix M = row | row;``
with comma-separated entries in each row.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..expr import Name, Num, ParseError, TokenStream, parse_expr, to_text, tokenize

# argument kinds: I ideal, P polynomial, N integer, M matrix; a trailing "+"
# repeats the last kind at least once, "?" makes it optional
SIGNATURES: dict[str, tuple[str, ...]] = {
    "gb": ("I",), "nf": ("P", "I"),
    "sum": ("I", "I"), "product": ("I", "I"), "power": ("I", "N"),
    "intersect": ("I", "I"), "colon": ("I", "I"),
    "saturate": ("I", "P"), "eliminate": ("I", "N"),
    "dim": ("I",), "codim": ("I",), "mult": ("I",), "hilbert": ("I",),
    "regseq": ("I", "N+"),
    "resolve": ("I",), "betti": ("I",), "pd": ("I",),
    "minors": ("M", "N"),
    "link": ("I", "I"), "unmixed": ("I",), "isunmixed": ("I",),
    "verify_paper": ("N?",),
}


@dataclass(frozen=True)
class RingDecl:
    field: str
    variables: tuple[str, ...]
    order: str | None = None

    def text(self) -> str:
        order = f" order {self.order}" if self.order else ""
        return f"ring {self.field}[{','.join(self.variables)}]{order};"


@dataclass(frozen=True)
class Binding:
    kind: str  # ideal | poly | matrix
    name: str
    body: tuple  # expressions, or rows of expressions for a matrix

    def text(self) -> str:
        if self.kind == "matrix":
            rows = " | ".join(", ".join(map(to_text, r)) for r in self.body)
            return f"matrix {self.name} = {rows};"
        return f"{self.kind} {self.name} = {', '.join(map(to_text, self.body))};"


@dataclass(frozen=True)
class IdealLit:
    gens: tuple

    def text(self) -> str:
        return f"ideal({', '.join(map(to_text, self.gens))})"


@dataclass(frozen=True)
class Command:
    name: str
    args: tuple  # expression nodes, IdealLit, or int
    line: int = 0
    col: int = 0

    def __eq__(self, other):
        return isinstance(other, Command) and (self.name, self.args) == (other.name, other.args)

    def __hash__(self):
        return hash((self.name, self.args))

    def arg_text(self, a) -> str:
        if isinstance(a, IdealLit):
            return a.text()
        if isinstance(a, int):
            return str(a)
        return to_text(a)

    def text(self) -> str:
        return f"{self.name}({', '.join(self.arg_text(a) for a in self.args)});"


@dataclass(frozen=True)
class Script:
    ring: RingDecl
    items: tuple  # Binding | Command

    @property
    def bindings(self) -> list[Binding]:
        return [i for i in self.items if isinstance(i, Binding)]

    @property
    def commands(self) -> list[Command]:
        return [i for i in self.items if isinstance(i, Command)]

    def text(self) -> str:
        return "\n".join([self.ring.text()] + [i.text() for i in self.items]) + "\n"


def print_script(s: Script) -> str:
    return s.text()


class _Parser:
    def __init__(self, src: str):
        self.ts = TokenStream(tokenize(src))
        self.vars: set[str] = set()
        self.kinds: dict[str, str] = {}

    # -- names -------------------------------------------------------------
    def _check_names(self, node, tok):
        """Every identifier in an expression is a variable or a bound poly."""
        stack = [node]
        while stack:
            n = stack.pop()
            if isinstance(n, Name):
                kind = self.kinds.get(n.id)
                if n.id in self.vars or kind == "poly":
                    continue
                if kind is not None:
                    raise ParseError(f"{n.id!r} is a {kind}, not a polynomial", tok.line, tok.col)
                raise ParseError(f"unbound identifier {n.id!r}", tok.line, tok.col)
            for attr in ("arg", "left", "right", "base"):
                child = getattr(n, attr, None)
                if child is not None:
                    stack.append(child)

    def _expr(self):
        tok = self.ts.peek
        node = parse_expr(self.ts)
        self._check_names(node, tok)
        return node

    def _expr_list(self, stop: set[str]) -> tuple:
        out = [self._expr()]
        while self.ts.at(","):
            self.ts.advance()
            out.append(self._expr())
        return tuple(out)

    # -- grammar -----------------------------------------------------------
    def script(self) -> Script:
        ring = self.ring_decl()
        items = []
        while self.ts.peek.kind != "eof":
            t = self.ts.peek
            if t.kind == "ident" and t.text in ("ideal", "poly", "matrix") \
                    and self.ts.toks[self.ts.pos + 1].kind == "ident":
                items.append(self.binding())
            elif t.kind == "ident":
                items.append(self.command())
            else:
                self.ts.fail({"binding", "command", "end of input"})
        return Script(ring, tuple(items))

    def ring_decl(self) -> RingDecl:
        self.ts.expect_word("ring")
        fld = self.field()
        self.ts.expect("[")
        names = [self.ts.ident().text]
        while self.ts.at(","):
            self.ts.advance()
            tok = self.ts.ident()
            if tok.text in names:
                raise ParseError(f"variable {tok.text!r} declared twice", tok.line, tok.col)
            names.append(tok.text)
        self.ts.expect("]")
        order = None
        if self.ts.at_word("order"):
            self.ts.advance()
            tok = self.ts.peek
            if not (self.ts.at_word("grevlex") or self.ts.at_word("lex")):
                self.ts.fail({"'grevlex'", "'lex'"})
            order = self.ts.advance().text
        self.ts.expect(";")
        self.vars = set(names)
        return RingDecl(fld, tuple(names), order)

    def field(self) -> str:
        if self.ts.at_word("QQ"):
            self.ts.advance()
            return "QQ"
        if self.ts.at_word("ZZ"):
            self.ts.advance()
            self.ts.expect("/")
            return f"ZZ/{self.ts.integer()}"
        self.ts.fail({"'QQ'", "'ZZ'"})

    def binding(self) -> Binding:
        kind = self.ts.advance().text
        tok = self.ts.ident()
        name = tok.text
        if name in self.vars:
            raise ParseError(f"{name!r} is a ring variable", tok.line, tok.col)
        if name in SIGNATURES or name in ("ring", "ideal", "poly", "matrix"):
            raise ParseError(f"{name!r} is reserved", tok.line, tok.col)
        self.ts.expect("=")
        if kind == "matrix":
            rows = [self._expr_list({"|", ";"})]
            while self.ts.at("|"):
                self.ts.advance()
                rows.append(self._expr_list({"|", ";"}))
            if len({len(r) for r in rows}) != 1:
                raise ParseError("matrix rows have different lengths", tok.line, tok.col)
            body = tuple(rows)
        else:
            body = self._expr_list({";"})
            if kind == "poly" and len(body) != 1:
                raise ParseError("a poly binding takes one expression", tok.line, tok.col)
        self.ts.expect(";")
        self.kinds[name] = kind
        return Binding(kind, name, body)

    def command(self) -> Command:
        tok = self.ts.ident()
        if tok.text not in SIGNATURES:
            raise ParseError(f"unknown command {tok.text!r}", tok.line, tok.col,
                             frozenset(["binding", "command"]))
        self.ts.expect("(")
        args = []
        if not self.ts.at(")"):
            args.append(self.argument())
            while self.ts.at(","):
                self.ts.advance()
                args.append(self.argument())
        self.ts.expect(")")
        self.ts.expect(";")
        args = self._check_args(tok, tuple(args))
        return Command(tok.text, args, tok.line, tok.col)

    def argument(self):
        if self.ts.at_word("ideal") and self.ts.toks[self.ts.pos + 1].text == "(":
            self.ts.advance()
            self.ts.expect("(")
            gens = self._expr_list({")"})
            self.ts.expect(")")
            return IdealLit(gens)
        t = self.ts.peek
        if t.kind == "ident" and self.kinds.get(t.text) in ("ideal", "matrix") \
                and self.ts.toks[self.ts.pos + 1].text in (",", ")"):
            self.ts.advance()
            return Name(t.text)
        return self._expr()

    def _check_args(self, tok, args):
        sig = SIGNATURES[tok.text]
        kinds = list(sig)
        if kinds and kinds[-1].endswith("+"):
            base = kinds[-1][0]
            kinds[-1] = base
            lo, hi = len(kinds), None
            expected = kinds + [base] * max(0, len(args) - len(kinds))
        elif kinds and kinds[-1].endswith("?"):
            kinds[-1] = kinds[-1][0]
            lo, hi = len(kinds) - 1, len(kinds)
            expected = kinds[:len(args)]
        else:
            lo = hi = len(kinds)
            expected = kinds
        if len(args) < lo or (hi is not None and len(args) > hi):
            want = f"{lo}" if hi == lo else (f"{lo} to {hi}" if hi is not None else f"at least {lo}")
            raise ParseError(f"{tok.text} takes {want} argument(s), got {len(args)}", tok.line, tok.col)
        out = []
        for i, (kind, a) in enumerate(zip(expected, args), 1):
            if kind == "N" and isinstance(a, Num):
                a = a.value  # integer slots hold plain ints, polynomial slots keep the node
            if not self._fits(kind, a):
                what = {"I": "an ideal", "P": "a polynomial", "N": "an integer", "M": "a matrix"}[kind]
                raise ParseError(f"argument {i} of {tok.text} must be {what}", tok.line, tok.col)
            out.append(a)
        return tuple(out)

    def _fits(self, kind, a) -> bool:
        if kind == "N":
            return isinstance(a, int)
        if kind == "I":
            return isinstance(a, IdealLit) or (isinstance(a, Name) and self.kinds.get(a.id) == "ideal")
        if kind == "M":
            return isinstance(a, Name) and self.kinds.get(a.id) == "matrix"
        # a polynomial: any expression, integers included
        if isinstance(a, IdealLit):
            return False
        if isinstance(a, Name) and self.kinds.get(a.id) in ("ideal", "matrix"):
            return False
        return True


def parse(source: str) -> Script:
    """Parse a script; raises :class:`ParseError` with a position on bad input."""
    return _Parser(source).script()
