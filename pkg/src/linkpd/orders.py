"""Monomial orders.

Monomials are exponent tuples.  Every order maps a monomial to an integer
key whose natural comparison is the order itself: the key packs one small
nonnegative field per variable, most significant first.  Products of
monomials add keys field-wise, so no field may exceed ``FIELD_MAX``.
"""

from __future__ import annotations

from dataclasses import dataclass

FIELD_BITS = 20
FIELD_MAX = (1 << FIELD_BITS) - 1


def _pack(fields) -> int:
    k = 0
    for f in fields:
        if f > FIELD_MAX:
            raise OverflowError(f"monomial degree {f} exceeds the supported bound {FIELD_MAX}")
        k = (k << FIELD_BITS) | f
    return k


def grevlex_fields(exp) -> list[int]:
    # (degree, e1+..+e_{n-1}, ..., e1+e2, e1); comparing these prefix sums
    # lexicographically is degree reverse lexicographic comparison.
    out = []
    s = 0
    for e in exp:
        s += e
        out.append(s)
    out.reverse()
    return out


class MonomialOrder:
    name = "order"

    def fields(self, exp) -> list[int]:
        raise NotImplementedError

    def key(self, exp) -> int:
        return _pack(self.fields(exp))

    def validate(self, nvars: int) -> None:
        pass

    def compare(self, a: tuple, b: tuple) -> int:
        if len(a) != len(b):
            raise ValueError(f"monomial arity mismatch: {len(a)} vs {len(b)}")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


@dataclass(frozen=True)
class GrevLex(MonomialOrder):
    name = "grevlex"

    def fields(self, exp):
        return grevlex_fields(exp)

    def __str__(self):
        return "grevlex"


@dataclass(frozen=True)
class Lex(MonomialOrder):
    name = "lex"

    def fields(self, exp):
        return list(exp)

    def __str__(self):
        return "lex"


@dataclass(frozen=True)
class Block(MonomialOrder):
    """Eliminate the first ``k`` variables: any monomial involving one of them
    exceeds every monomial free of them.  The eliminated block is compared by
    grevlex, ties are broken by ``inner`` on the remaining variables."""

    k: int
    inner: MonomialOrder = GrevLex()

    name = "block"

    def fields(self, exp):
        k = self.k
        return grevlex_fields(exp[:k]) + self.inner.fields(exp[k:])

    def validate(self, nvars):
        if not 0 < self.k < nvars:
            raise ValueError(f"Block order needs 0 < k < nvars, got k={self.k}, nvars={nvars}")
        self.inner.validate(nvars - self.k)

    def __str__(self):
        return f"block({self.k},{self.inner})"


def mono_cmp(m1, m2, order: MonomialOrder) -> int:
    """Return -1, 0 or 1 as ``m1`` is less than, equal to or greater than ``m2``."""
    return order.compare(tuple(m1), tuple(m2))


def order_from_name(name: str) -> MonomialOrder:
    name = name.strip().lower()
    if name == "grevlex":
        return GrevLex()
    if name == "lex":
        return Lex()
    raise ValueError(f"unknown monomial order {name!r}")
