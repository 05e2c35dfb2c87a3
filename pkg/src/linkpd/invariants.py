"""Hilbert series, dimension, codimension and multiplicity of homogeneous ideals.

Everything is read off the leading monomial ideal of the reduced Groebner
basis: the Hilbert function of R/I equals that of R/in(I) for homogeneous I.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .ideal import Ideal
from .poly import Polynomial


class NotHomogeneous(ValueError):
    pass


@dataclass(frozen=True)
class HilbertSeries:
    """HS(R/I) = numerator(t) / (1 - t)^dim with numerator(1) != 0.

    ``numerator[i]`` is the coefficient of t^i.  For the unit ideal the
    numerator is empty and ``dim`` is -1.
    """

    numerator: tuple
    dim: int

    @property
    def multiplicity(self) -> int:
        return sum(self.numerator)

    def coefficients(self, upto: int) -> list[int]:
        """The Hilbert function h(0), ..., h(upto)."""
        if self.dim < 0:
            return [0] * (upto + 1)
        from math import comb
        out = []
        for k in range(upto + 1):
            if self.dim == 0:
                out.append(self.numerator[k] if k < len(self.numerator) else 0)
                continue
            out.append(sum(c * comb(k - i + self.dim - 1, self.dim - 1)
                           for i, c in enumerate(self.numerator) if i <= k))
        return out

    def __str__(self):
        terms = []
        for i, c in enumerate(self.numerator):
            if c:
                mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
                coef = str(c) if (not mono or c not in (1, -1)) else ("-" if c == -1 else "")
                terms.append(f"{coef}*{mono}" if coef not in ("", "-") and mono else f"{coef}{mono}")
        num = " + ".join(terms).replace("+ -", "- ") or "0"
        return f"({num}) / (1 - t)^{self.dim}"


# -- monomial ideal combinatorics ---------------------------------------------

def minimal_monomials(gens: Iterable[tuple]) -> list[tuple]:
    gens = sorted(set(gens), key=sum)
    out: list[tuple] = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def kpoly(gens: Sequence[tuple]) -> list[int]:
    """Numerator K(t) with HS(R/M) = K(t)/(1-t)^n for the monomial ideal M.

    Bigatti-style pivot recursion: K(M) = K(M + (p)) + t^deg(p) K(M : p)
    with p a power of a variable shared by several generators; memoized.
    """
    memo: dict = {}

    def rec(ms: tuple) -> list[int]:
        hit = memo.get(ms)
        if hit is not None:
            return hit
        if not ms:
            return [1]
        counts: dict = {}
        for m in ms:
            for i, e in enumerate(m):
                if e:
                    counts[i] = counts.get(i, 0) + 1
        shared = [i for i, c in counts.items() if c > 1]
        if not shared:
            res = [1]
            for m in ms:
                d = sum(m)
                res = _poly_mul(res, [1] + [0] * (d - 1) + [-1])
            memo[ms] = res
            return res
        i = max(shared, key=lambda v: (counts[v], -v))
        e = min(m[i] for m in ms if m[i])
        pivot = tuple(e if j == i else 0 for j in range(len(ms[0])))
        plus = tuple(sorted(minimal_monomials(list(ms) + [pivot])))
        quot = tuple(sorted(minimal_monomials(
            tuple(max(a - b, 0) for a, b in zip(m, pivot)) for m in ms)))
        res = _poly_add(rec(plus), [0] * e + rec(quot))
        memo[ms] = res
        return res

    out = rec(tuple(sorted(minimal_monomials(gens))))
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def hilbert_from_monomials(gens: Sequence[tuple], nvars: int) -> HilbertSeries:
    gens = minimal_monomials(gens)
    if any(not any(g) for g in gens):
        return HilbertSeries((), -1)
    k = kpoly(gens) if gens else [1]
    d = nvars
    # divide out (1 - t) while K(1) = 0
    while d > 0 and sum(k) == 0:
        q = []
        acc = 0
        for c in k[:-1]:
            acc += c
            q.append(acc)
        k = q
        d -= 1
    while len(k) > 1 and k[-1] == 0:
        k.pop()
    return HilbertSeries(tuple(k), d)


def monomial_codim(gens: Sequence[tuple], nvars: int) -> int:
    """Height of a monomial ideal: the smallest set of variables meeting the
    support of every generator (complement of a maximal independent set)."""
    gens = minimal_monomials(gens)
    if not gens:
        return 0
    if any(not any(g) for g in gens):
        return nvars + 1
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in gens]
    # squarefree supports suffice; drop those containing another
    supports = sorted(set(supports), key=len)
    reduced: list[frozenset] = []
    for s in supports:
        if not any(t <= s for t in reduced):
            reduced.append(s)
    best = [len(frozenset().union(*reduced))]

    def search(chosen: frozenset, remaining: list[frozenset]):
        if len(chosen) >= best[0]:
            return
        open_ = [s for s in remaining if not (s & chosen)]
        if not open_:
            best[0] = len(chosen)
            return
        s = min(open_, key=len)
        for v in sorted(s):
            search(chosen | {v}, open_)

    search(frozenset(), reduced)
    return best[0]


# -- ideal-level invariants ----------------------------------------------------

def _require_homogeneous(I: Ideal):
    if not I.is_homogeneous():
        raise NotHomogeneous("this invariant needs a homogeneous ideal")


def leading_ideal(I: Ideal) -> Ideal:
    R = I.ring
    return Ideal(R, [R.monomial(m) for m in I.gb().leading_monomials])


def hilbert(I: Ideal) -> HilbertSeries:
    _require_homogeneous(I)
    return hilbert_from_monomials(I.gb().leading_monomials, I.ring.nvars)


def dimension(I: Ideal) -> int:
    """Krull dimension of R/I; -1 for the unit ideal."""
    if I.is_zero():
        return I.ring.nvars
    lms = I.gb().leading_monomials
    if any(not any(m) for m in lms):
        return -1
    return I.ring.nvars - monomial_codim(lms, I.ring.nvars)


def codim(I: Ideal) -> int:
    """Height of I as nvars - dim(R/I); the unit ideal reports nvars + 1."""
    return I.ring.nvars - dimension(I)


def multiplicity(I: Ideal) -> int:
    _require_homogeneous(I)
    if I.is_unit():
        raise ValueError("the unit ideal has no multiplicity")
    return hilbert(I).multiplicity


def is_regular_sequence(fs: Sequence[Polynomial]) -> bool:
    """For homogeneous forms: regular iff the height equals the length."""
    fs = list(fs)
    if not fs:
        raise ValueError("empty sequence")
    for f in fs:
        if f.homogeneous_degree() is None:
            raise NotHomogeneous(f"{f} is not homogeneous")
        if not f or f.is_unit():
            return False
    return codim(Ideal(fs[0].ring, fs)) == len(fs)
