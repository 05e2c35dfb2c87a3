"""Buchberger's algorithm and normal forms.

The engine works on raw ``{exponent: coeff}`` dicts; :class:`GroebnerBasis`
wraps the reduced result in :class:`~linkpd.poly.Polynomial` objects.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Sequence

from .poly import Polynomial, PolyRing, RingMismatch


class _Elt:
    """A monic basis element together with cached leading data."""

    __slots__ = ("lm", "deg", "mask", "d")

    def __init__(self, lm: tuple, d: dict):
        self.lm = lm
        self.deg = sum(lm)
        self.mask = _mask(lm)
        self.d = d


def _mask(exp) -> int:
    m = 0
    for i, e in enumerate(exp):
        if e:
            m |= 1 << i
    return m


def _divides(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _find_divisor(m: tuple, mdeg: int, mmask: int, basis: Sequence[_Elt]):
    for g in basis:
        if g.deg <= mdeg and not (g.mask & ~mmask) and _divides(g.lm, m):
            return g
    return None


def _monic(d: dict, key, field) -> tuple[tuple, dict]:
    lm = max(d, key=key)
    c = d[lm]
    if c != 1:
        inv = field.inv(c)
        p = getattr(field, "p", None)
        if p is None:
            d = {e: v * inv for e, v in d.items()}
        else:
            d = {e: v * inv % p for e, v in d.items()}
    return lm, d


def reduce_dict(f: dict, basis: Sequence[_Elt], ring: PolyRing, full: bool = True) -> dict:
    """Normal form of ``f`` modulo monic ``basis``.

    With ``full=False`` stop at the first irreducible leading term (top
    reduction); the returned dict then still contains unreduced tails.
    """
    if not f or not basis:
        return dict(f)
    key = ring.key
    p = getattr(ring.field, "p", None)
    rem = dict(f)
    heap = [(-key(e), e) for e in rem]
    heapq.heapify(heap)
    out: dict = {}
    pop, push = heapq.heappop, heapq.heappush
    while heap:
        _, m = pop(heap)
        c = rem.get(m)
        if c is None:
            continue
        g = _find_divisor(m, sum(m), _mask(m), basis)
        if g is None:
            del rem[m]
            out[m] = c
            if not full:
                out.update(rem)
                return out
            continue
        del rem[m]
        glm = g.lm
        t = tuple(x - y for x, y in zip(m, glm))
        for e, gc in g.d.items():
            if e == glm:
                continue
            ee = tuple(x + y for x, y in zip(e, t))
            old = rem.get(ee)
            if old is None:
                v = -c * gc
                if p is not None:
                    v %= p
                if v:
                    rem[ee] = v
                    push(heap, (-key(ee), ee))
            else:
                v = old - c * gc
                if p is not None:
                    v %= p
                if v:
                    rem[ee] = v
                else:
                    del rem[ee]
    return out


def _spoly(f: _Elt, g: _Elt, p) -> dict:
    lcm = _lcm(f.lm, g.lm)
    tf = tuple(x - y for x, y in zip(lcm, f.lm))
    tg = tuple(x - y for x, y in zip(lcm, g.lm))
    out = {}
    for e, c in f.d.items():
        out[tuple(x + y for x, y in zip(e, tf))] = c
    for e, c in g.d.items():
        ee = tuple(x + y for x, y in zip(e, tg))
        v = out.get(ee, 0) - c
        if p is not None:
            v %= p
        if v:
            out[ee] = v
        else:
            out.pop(ee, None)
    return out


def _weighted_deg(exp, weights) -> int:
    if weights is None:
        return sum(exp)
    return sum(w * e for w, e in zip(weights, exp))


def groebner_dicts(polys: Iterable[dict], ring: PolyRing, weights=None) -> list[_Elt]:
    """Reduced Groebner basis of the ideal generated by ``polys``.

    Pairs are processed by the normal strategy (smallest lcm degree first,
    measured with ``weights`` when given) with the Gebauer-Moeller
    installation of Buchberger's product and chain criteria.
    """
    key = ring.key
    field = ring.field
    p = getattr(field, "p", None)

    elts: list[_Elt] = []
    active: list[int] = []
    pairs: list = []  # heap of (deg, key(lcm), i, j)
    pairset: set = set()

    def install(h: _Elt):
        nonlocal active
        hi = len(elts)
        elts.append(h)
        hlm = h.lm
        # Gebauer-Moeller: new pairs (h, g)
        cand = []
        for gi in active:
            g = elts[gi]
            lcm = _lcm(hlm, g.lm)
            coprime = all(not (a and b) for a, b in zip(hlm, g.lm))
            cand.append((gi, lcm, coprime))
        keep = []
        for idx, (gi, lcm, coprime) in enumerate(cand):
            if coprime:
                keep.append((gi, lcm, coprime))
                continue
            redundant = False
            for jdx, (gj, lcm2, _) in enumerate(cand):
                if jdx == idx:
                    continue
                if _divides(lcm2, lcm) and (lcm2 != lcm or jdx < idx):
                    redundant = True
                    break
            if not redundant:
                keep.append((gi, lcm, coprime))
        # old pairs killed by the chain criterion
        if pairset:
            dead = set()
            for (i, j) in pairset:
                lij = _lcm(elts[i].lm, elts[j].lm)
                if _divides(hlm, lij) and _lcm(elts[i].lm, hlm) != lij and _lcm(elts[j].lm, hlm) != lij:
                    dead.add((i, j))
            pairset.difference_update(dead)
        for gi, lcm, coprime in keep:
            if coprime:
                continue
            pr = (gi, hi)
            pairset.add(pr)
            heapq.heappush(pairs, (_weighted_deg(lcm, weights), key(lcm), gi, hi))
        active = [gi for gi in active if not _divides(hlm, elts[gi].lm)]
        active.append(hi)

    start = []
    for d in polys:
        if d:
            lm, d = _monic(d, key, field)
            start.append(_Elt(lm, d))
    # seed in ascending order so low-degree elements reduce the rest
    start.sort(key=lambda e: (_weighted_deg(e.lm, weights), key(e.lm)))
    for s in start:
        basis = [elts[i] for i in active]
        r = reduce_dict(s.d, basis, ring)
        if r:
            lm, r = _monic(r, key, field)
            if not any(lm):
                return [_Elt(lm, r)]
            install(_Elt(lm, r))

    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        if (i, j) not in pairset:
            continue
        pairset.discard((i, j))
        s = _spoly(elts[i], elts[j], p)
        if not s:
            continue
        basis = [elts[a] for a in active]
        r = reduce_dict(s, basis, ring)
        if r:
            lm, r = _monic(r, key, field)
            if not any(lm):
                return [_Elt(lm, r)]
            install(_Elt(lm, r))

    return _interreduce([elts[i] for i in active], ring)


def _interreduce(basis: list[_Elt], ring: PolyRing) -> list[_Elt]:
    key = ring.key
    # minimal basis: drop elements whose leading monomial is divisible by another's
    basis = sorted(basis, key=lambda e: key(e.lm))
    minimal: list[_Elt] = []
    for g in basis:
        if not any(_divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    out = []
    for g in minimal:
        others = [h for h in minimal if h is not g]
        tail = dict(g.d)
        c = tail.pop(g.lm)
        r = reduce_dict(tail, others, ring)
        r[g.lm] = c
        out.append(_Elt(g.lm, r))
    out.sort(key=lambda e: key(e.lm), reverse=True)
    return out


class GroebnerBasis:
    """Reduced Groebner basis: monic, auto-reduced, sorted by leading
    monomial descending.  Unique for a given ideal and monomial order."""

    def __init__(self, ring: PolyRing, elts: list[_Elt]):
        self.ring = ring
        self._elts = elts
        self.elements = tuple(Polynomial(ring, e.d) for e in elts)

    @classmethod
    def compute(cls, gens: Iterable[Polynomial], ring: PolyRing | None = None,
                weights=None) -> "GroebnerBasis":
        gens = list(gens)
        if ring is None:
            if not gens:
                raise ValueError("need a ring to build the basis of an empty generator list")
            ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise RingMismatch(f"{g.ring!r} vs {ring!r}")
        return cls(ring, groebner_dicts((g._d for g in gens if g), ring, weights))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis) and self.ring == other.ring
                and self.elements == other.elements)

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return "GroebnerBasis[" + ", ".join(map(str, self.elements)) + "]"

    @property
    def leading_monomials(self) -> list[tuple]:
        return [e.lm for e in self._elts]

    def is_unit(self) -> bool:
        return len(self._elts) == 1 and not any(self._elts[0].lm)

    def is_zero(self) -> bool:
        return not self._elts

    def reduce(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise RingMismatch(f"{f.ring!r} vs {self.ring!r}")
        return Polynomial(self.ring, reduce_dict(f._d, self._elts, self.ring))

    def contains(self, f: Polynomial) -> bool:
        if f.ring != self.ring:
            raise RingMismatch(f"{f.ring!r} vs {self.ring!r}")
        return not reduce_dict(f._d, self._elts, self.ring, full=False)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Remainder of ``f`` modulo ``G``: no term divisible by a leading monomial of ``G``."""
    return G.reduce(f)


def buchberger(gens: Sequence[Polynomial], ring: PolyRing | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens`` (zeros dropped)."""
    return GroebnerBasis.compute(gens, ring)
