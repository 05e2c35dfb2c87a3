"""Ideals of a polynomial ring and their algebra."""

from __future__ import annotations

from typing import Iterable, Sequence

from .groebner import GroebnerBasis, _Elt, _interreduce, groebner_dicts
from .orders import Block, GrevLex, Lex
from .poly import Polynomial, PolyRing, RingMismatch


class Ideal:
    """An ideal given by generators, with a lazily cached reduced Groebner basis."""

    def __init__(self, ring: PolyRing, gens: Iterable[Polynomial] = (),
                 gb: GroebnerBasis | None = None):
        self.ring = ring
        out = []
        seen = set()
        for g in gens:
            g = ring(g)
            if g and g not in seen:
                seen.add(g)
                out.append(g)
        self.gens = tuple(out)
        self._gb = gb

    @classmethod
    def of(cls, *gens: Polynomial) -> "Ideal":
        if not gens:
            raise ValueError("Ideal.of needs at least one generator to know its ring")
        return cls(gens[0].ring, gens)

    # -- Groebner data ----------------------------------------------------
    def gb(self) -> GroebnerBasis:
        if self._gb is None:
            self._gb = GroebnerBasis.compute(self.gens, self.ring)
        return self._gb

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        if any(g.is_unit() for g in self.gens):
            return True
        return self.gb().is_unit()

    def is_homogeneous(self) -> bool:
        return all(g.homogeneous_degree() is not None for g in self.gens)

    def _check_ring(self, other):
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")

    def contains(self, f: Polynomial) -> bool:
        self._check_ring(f)
        if not f:
            return True
        return self.gb().contains(f)

    def __contains__(self, f):
        return self.contains(f)

    def contains_ideal(self, other: "Ideal") -> bool:
        self._check_ring(other)
        return all(self.contains(g) for g in other.gens)

    def equals(self, other: "Ideal") -> bool:
        self._check_ring(other)
        return self.gb().elements == other.gb().elements

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.equals(other)

    def __hash__(self):
        return hash(self.gb().elements)

    def __le__(self, other: "Ideal") -> bool:
        return other.contains_ideal(self)

    def __repr__(self):
        return "ideal(" + ", ".join(map(str, self.gens)) + ")"

    __str__ = __repr__

    # -- combination ------------------------------------------------------
    def __add__(self, other: "Ideal") -> "Ideal":
        return combine(self, other, "sum")

    def __mul__(self, other: "Ideal") -> "Ideal":
        return combine(self, other, "product")

    def __pow__(self, e: int) -> "Ideal":
        return power(self, e)

    def intersect(self, other: "Ideal") -> "Ideal":
        return intersect(self, other)

    def colon(self, other: "Ideal | Polynomial") -> "Ideal":
        return colon(self, other)

    def minimalize(self) -> "Ideal":
        return minimalize(self)


def _as_ideal(ring: PolyRing, x) -> Ideal:
    if isinstance(x, Ideal):
        return x
    if isinstance(x, Polynomial):
        return Ideal(ring, [x])
    return Ideal(ring, list(x))


def unit_ideal(ring: PolyRing) -> Ideal:
    return Ideal(ring, [ring.one()])


def contains(I: Ideal, f: Polynomial) -> bool:
    return I.contains(f)


def equals(I: Ideal, J: Ideal) -> bool:
    return I.equals(J)


def combine(I: Ideal, J: Ideal, op: str) -> Ideal:
    """``op="sum"``: concatenated generators; ``op="product"``: pairwise products."""
    I._check_ring(J)
    if op == "sum":
        return Ideal(I.ring, I.gens + J.gens)
    if op == "product":
        return Ideal(I.ring, [f * g for f in I.gens for g in J.gens])
    raise ValueError(f"unknown combination {op!r}")


def power(I: Ideal, e: int) -> Ideal:
    if not isinstance(e, int) or e < 1:
        raise ValueError(f"ideal powers need an exponent >= 1, got {e!r}")
    result = I
    for _ in range(e - 1):
        result = combine(result, I, "product")
    return result


def minimalize(I: Ideal) -> Ideal:
    """Drop generators lying in the ideal of the others, keeping low degrees first."""
    key = I.ring.key
    cands = sorted(I.gens, key=lambda g: (g.degree(), key(g.lm)))
    kept: list[Polynomial] = []
    current: GroebnerBasis | None = None
    for g in cands:
        if current is not None and current.contains(g):
            continue
        kept.append(g.monic())
        current = GroebnerBasis.compute(kept, I.ring)
    return Ideal(I.ring, kept, gb=I._gb)


def _elimination_basis(ring: PolyRing, dicts: Iterable[dict], k: int) -> list[dict]:
    """Groebner basis (in the Block(k) ring) of polynomials whose first ``k``
    variables are eliminated; returns the elements free of them."""
    elts = groebner_dicts(dicts, ring, weights=(0,) * k + (1,) * (ring.nvars - k))
    return [e.d for e in elts if not any(e.lm[:k])]


def _from_eliminated(ring: PolyRing, dicts: Sequence[dict], k: int) -> list[_Elt]:
    key = ring.key
    out = []
    for d in dicts:
        dd = {e[k:]: c for e, c in d.items()}
        lm = max(dd, key=key)
        out.append(_Elt(lm, dd))
    out.sort(key=lambda e: key(e.lm), reverse=True)
    return out


def intersect(I: Ideal, J: Ideal, minimal: bool = True) -> Ideal:
    """I ∩ J via the Groebner basis of t*I + (1 - t)*J eliminating t."""
    I._check_ring(J)
    R = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(R, [])
    if I.is_unit():
        return J
    if J.is_unit():
        return I
    E = R.elimination_ring(["t"])
    p = getattr(R.field, "p", None)
    dicts = []
    for f in I.gens:
        dicts.append({(1,) + e: c for e, c in f._d.items()})
    for g in J.gens:
        d = {}
        for e, c in g._d.items():
            d[(0,) + e] = c
            d[(1,) + e] = (-c % p) if p is not None else -c
        dicts.append(d)
    kept = _elimination_basis(E, dicts, 1)
    elts = _from_eliminated(R, kept, 1)
    gb = GroebnerBasis(R, elts)
    result = Ideal(R, gb.elements, gb=gb)
    return minimalize(result) if minimal else result


def _principal_colon(I: Ideal, f: Polynomial) -> Ideal:
    R = I.ring
    if f.is_unit():
        return I
    if I.contains(f):
        return unit_ideal(R)
    meet = intersect(I, Ideal(R, [f]), minimal=False)
    quots = [h.exact_div(f).monic() for h in meet.gens]
    # the quotients form a Groebner basis of I : f; only inter-reduction is left
    elts = _interreduce([_Elt(q.lm, q._d) for q in quots], R)
    return Ideal(R, quots, gb=GroebnerBasis(R, elts))


def colon(I: Ideal, J: Ideal | Polynomial) -> Ideal:
    """I : J = {r : r J ⊆ I}, as the intersection of principal colons."""
    R = I.ring
    J = _as_ideal(R, J)
    I._check_ring(J)
    if J.is_zero():
        raise ValueError("colon by the zero ideal is undefined here")
    if I.contains_ideal(J):
        return unit_ideal(R)
    result = None
    for f in J.gens:
        part = _principal_colon(I, f)
        if result is None:
            result = part
        elif not part.is_unit():
            result = intersect(result, part, minimal=False)
    return minimalize(result)


def saturate(I: Ideal, f: Polynomial) -> Ideal:
    """I : f^∞, by iterating the colon until it stabilizes."""
    I._check_ring(f)
    if not f:
        raise ValueError("saturation by zero is undefined")
    current = I
    while True:
        nxt = colon(current, Ideal(I.ring, [f]))
        if nxt.equals(current):
            return current
        current = nxt


def subring(ring: PolyRing, k: int) -> PolyRing:
    order = ring.order
    if isinstance(order, Block):
        order = order.inner if order.k == k else GrevLex()
    elif not isinstance(order, (GrevLex, Lex)):
        order = GrevLex()
    return PolyRing(ring.var_names[k:], ring.field, order)


def eliminate(I: Ideal, k: int) -> Ideal:
    """Contraction of ``I`` to the subring on the trailing ``nvars - k`` variables."""
    R = I.ring
    if not 0 <= k < R.nvars:
        raise ValueError(f"can eliminate between 0 and {R.nvars - 1} variables, got {k}")
    if k == 0:
        return I
    S = subring(R, k)
    E = PolyRing(R.var_names, R.field, Block(k, S.order))
    kept = _elimination_basis(E, (g._d for g in I.gens), k)
    elts = _from_eliminated(S, kept, k)
    gb = GroebnerBasis(S, elts)
    return Ideal(S, gb.elements, gb=gb)
