"""Polynomial rings and canonical sparse polynomials."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .fields import DEFAULT_PRIME, QQ, FieldSpec, PrimeField
from .orders import Block, GrevLex, MonomialOrder


class RingMismatch(ValueError):
    """Raised when operands live in different polynomial rings."""


class PolyRing:
    """k[x_1, ..., x_n] with a fixed monomial order.

    Variables are positional; names only matter for printing and parsing.
    """

    def __init__(self, var_names: Sequence[str], field: FieldSpec | None = None,
                 order: MonomialOrder | None = None):
        names = tuple(var_names)
        if not names:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"variable names must be distinct: {names}")
        self.var_names = names
        self.nvars = len(names)
        self.field = field if field is not None else PrimeField(DEFAULT_PRIME)
        self.order = order if order is not None else GrevLex()
        self.order.validate(self.nvars)
        self._index = {name: i for i, name in enumerate(names)}

        cache: dict = {}
        okey = self.order.key

        def key(exp):
            k = cache.get(exp)
            if k is None:
                k = cache[exp] = okey(exp)
            return k

        self.key = key
        self.zero_exp = (0,) * self.nvars

    # -- identity ---------------------------------------------------------
    def _sig(self):
        return (self.var_names, self.field, self.order)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self._sig() == other._sig()

    def __hash__(self):
        return hash(self._sig())

    def __repr__(self):
        return f"{self.field!r}[{','.join(self.var_names)}] ({self.order})"

    # -- constructors -----------------------------------------------------
    def poly(self, terms: Mapping[tuple, object]) -> "Polynomial":
        """Build a polynomial from ``{exponent tuple: coefficient}``."""
        coerce = self.field.coerce
        d = {}
        for exp, c in terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != self.nvars or min(exp, default=0) < 0:
                raise ValueError(f"bad exponent vector {exp} for {self.nvars} variables")
            v = coerce(d.get(exp, 0) + coerce(c))
            if v:
                d[exp] = v
            else:
                d.pop(exp, None)
        return Polynomial(self, d)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field.coerce(c)
        return Polynomial(self, {self.zero_exp: c} if c else {})

    def monomial(self, exp: tuple, c=1) -> "Polynomial":
        return self.poly({tuple(exp): c})

    def gen(self, i: int) -> "Polynomial":
        exp = [0] * self.nvars
        exp[i] = 1
        return Polynomial(self, {tuple(exp): self.field.coerce(1)})

    def gens(self) -> list["Polynomial"]:
        return [self.gen(i) for i in range(self.nvars)]

    def var(self, name: str) -> "Polynomial":
        try:
            return self.gen(self._index[name])
        except KeyError:
            raise KeyError(f"no variable named {name!r} in {self!r}") from None

    def index(self, name: str) -> int:
        return self._index[name]

    def __call__(self, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            if value.ring != self:
                raise RingMismatch(f"{value.ring!r} is not {self!r}")
            return value
        return self.constant(value)

    # -- derived rings ----------------------------------------------------
    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.var_names, self.field, order)

    def with_field(self, field: FieldSpec) -> "PolyRing":
        return PolyRing(self.var_names, field, self.order)

    def elimination_ring(self, extra: Sequence[str]) -> "PolyRing":
        """Prepend fresh variables that a Block order eliminates first."""
        names = list(extra)
        for i, n in enumerate(names):
            while n in self._index or n in names[:i]:
                n += "_"
            names[i] = n
        return PolyRing(tuple(names) + self.var_names, self.field,
                        Block(len(names), self.order))


def _fmt_monomial(names, exp) -> str:
    parts = []
    for name, e in zip(names, exp):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


class Polynomial:
    """Immutable element of a :class:`PolyRing`.

    The canonical form is a dict ``{exponent tuple: nonzero coefficient}``;
    :attr:`terms` lists it in strictly descending monomial order.
    """

    __slots__ = ("ring", "_d", "_hash", "_terms")

    def __init__(self, ring: PolyRing, d: dict):
        # trusted constructor: d must already be canonical
        self.ring = ring
        self._d = d
        self._hash = None
        self._terms = None

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> tuple:
        """``((coeff, exp), ...)`` in strictly descending order."""
        if self._terms is None:
            key = self.ring.key
            self._terms = tuple((self._d[e], e) for e in sorted(self._d, key=key, reverse=True))
        return self._terms

    def as_dict(self) -> dict:
        return dict(self._d)

    def __len__(self):
        return len(self._d)

    def __bool__(self):
        return bool(self._d)

    def is_zero(self) -> bool:
        return not self._d

    def is_constant(self) -> bool:
        return not self._d or (len(self._d) == 1 and self.ring.zero_exp in self._d)

    def is_unit(self) -> bool:
        return len(self._d) == 1 and self.ring.zero_exp in self._d

    @property
    def lm(self) -> tuple:
        if not self._d:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self._d, key=self.ring.key)

    @property
    def lc(self):
        return self._d[self.lm]

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._d), default=-1)

    def homogeneous_degree(self) -> int | None:
        """The common degree of all terms, -1 for zero, None if inhomogeneous."""
        degs = {sum(e) for e in self._d}
        if not degs:
            return -1
        return degs.pop() if len(degs) == 1 else None

    def variables(self) -> set[int]:
        return {i for e in self._d for i, a in enumerate(e) if a}

    # -- arithmetic -------------------------------------------------------
    def _coerce_other(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, int) or hasattr(other, "denominator"):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, add_dicts(self._d, other._d, self.ring.field, 1))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, add_dicts(self._d, other._d, self.ring.field, -1))

    def __rsub__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, {e: neg(c) for e, c in self._d.items()})

    def __mul__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, mul_dicts(self._d, other._d, self.ring.field))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c) -> "Polynomial":
        f = self.ring.field
        c = f.coerce(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {e: f.mul(a, c) for e, a in self._d.items()})

    def monic(self) -> "Polynomial":
        if not self._d:
            return self
        return self.scale(self.ring.field.inv(self.lc))

    def mul_monomial(self, exp: tuple, c=1) -> "Polynomial":
        f = self.ring.field
        c = f.coerce(c)
        return Polynomial(self.ring, {tuple(a + b for a, b in zip(e, exp)): f.mul(v, c)
                                      for e, v in self._d.items()})

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        """Quotient of an exact division; raises if ``other`` does not divide."""
        q, r = divide_by(self, other)
        if r:
            raise ArithmeticError("division is not exact")
        return q

    def subs(self, images: Mapping[int, "Polynomial"] | Sequence["Polynomial"],
             target: PolyRing | None = None) -> "Polynomial":
        """Substitute variable ``i`` by ``images[i]`` (a polynomial in ``target``)."""
        target = target or self.ring
        if isinstance(images, Mapping):
            imgs = [images.get(i, None) for i in range(self.ring.nvars)]
            if target is not self.ring:
                missing = [i for i, v in enumerate(imgs) if v is None]
                if missing:
                    raise ValueError("every variable needs an image when changing rings")
            imgs = [v if v is not None else self.ring.gen(i) for i, v in enumerate(imgs)]
        else:
            imgs = list(images)
        result = target.zero()
        powers: dict = {}
        for exp, c in self._d.items():
            term = target.constant(c)
            for i, e in enumerate(exp):
                if e:
                    p = powers.get((i, e))
                    if p is None:
                        p = powers[(i, e)] = imgs[i] ** e
                    term = term * p
            result = result + term
        return result

    def to_ring(self, ring: PolyRing, var_map: Sequence[int] | None = None) -> "Polynomial":
        """Re-embed into ``ring``; variable ``i`` goes to ``ring`` variable ``var_map[i]``
        (by default matched by name)."""
        if var_map is None:
            var_map = [ring.index(n) for n in self.ring.var_names]
        d = {}
        coerce = ring.field.coerce
        for exp, c in self._d.items():
            new = [0] * ring.nvars
            for i, e in enumerate(exp):
                if e:
                    new[var_map[i]] += e
            c = coerce(c)
            if c:
                d[tuple(new)] = c
        return Polynomial(ring, d)

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._d == other._d
        if isinstance(other, int):
            return self._d == self.ring.constant(other)._d
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._d.items()))
        return self._hash

    def __str__(self):
        if not self._d:
            return "0"
        fmt = self.ring.field.format
        names = self.ring.var_names
        out = []
        for c, exp in self.terms:
            s = fmt(c)
            neg = s.startswith("-")
            if neg:
                s = s[1:]
            mono = _fmt_monomial(names, exp)
            if mono:
                body = mono if s == "1" else f"{s}*{mono}"
            else:
                body = s
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({self})"


# -- dict-level kernels (shared with the Groebner engine) ------------------

def add_dicts(a: dict, b: dict, field: FieldSpec, sign: int = 1) -> dict:
    out = dict(a)
    p = getattr(field, "p", None)
    for e, c in b.items():
        v = out.get(e, 0) + (c if sign > 0 else -c)
        if p is not None:
            v %= p
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def mul_dicts(a: dict, b: dict, field: FieldSpec) -> dict:
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    p = getattr(field, "p", None)
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    if p is not None:
        return {e: c % p for e, c in out.items() if c % p}
    return {e: c for e, c in out.items() if c}


def divide_by(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Multivariate division of ``f`` by the single polynomial ``g``."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    fld = ring.field
    key = ring.key
    glm, glc = g.lm, g.lc
    ginv = fld.inv(glc)
    rem = dict(f._d)
    q: dict = {}
    r: dict = {}
    while rem:
        m = max(rem, key=key)
        c = rem[m]
        if all(x >= y for x, y in zip(m, glm)):
            t = tuple(x - y for x, y in zip(m, glm))
            qc = fld.mul(c, ginv)
            q[t] = qc
            for e, gc in g._d.items():
                ee = tuple(x + y for x, y in zip(e, t))
                v = fld.sub(rem.get(ee, 0), fld.mul(qc, gc))
                if v:
                    rem[ee] = v
                else:
                    rem.pop(ee, None)
        else:
            r[m] = c
            del rem[m]
    return Polynomial(ring, q), Polynomial(ring, r)


def is_homogeneous(f: Polynomial) -> tuple[bool, int]:
    """``(True, d)`` if every term has degree ``d``; the zero polynomial gives
    ``(True, -1)``; inhomogeneous input gives ``(False, -1)``."""
    d = f.homogeneous_degree()
    if d is None:
        return False, -1
    return True, d


def poly_arith(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    if f.ring != g.ring:
        raise RingMismatch(f"{f.ring!r} vs {g.ring!r}")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def ring(names: str | Iterable[str], field: FieldSpec | None = None,
         order: MonomialOrder | None = None) -> tuple[PolyRing, list[Polynomial]]:
    """Convenience: ``R, (x, y) = ring("x,y")``."""
    if isinstance(names, str):
        names = [n.strip() for n in names.replace(" ", ",").split(",") if n.strip()]
    R = PolyRing(list(names), field, order)
    return R, R.gens()


__all__ = [
    "PolyRing", "Polynomial", "RingMismatch", "is_homogeneous", "poly_arith",
    "ring", "QQ", "divide_by",
]
