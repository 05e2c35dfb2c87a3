"""Algebraic linkage: regular sequences inside an ideal, links, unmixed parts."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Sequence

from .ideal import Ideal, colon
from .invariants import NotHomogeneous, codim, is_regular_sequence, multiplicity
from .poly import Polynomial, PolyRing

DEFAULT_RETRIES = 64


class RegularSequenceError(RuntimeError):
    pass


class LinkError(ValueError):
    def __init__(self, problems: list[str]):
        super().__init__("; ".join(problems))
        self.problems = problems


@dataclass
class LinkResult:
    z: list[Polynomial]
    linked: Ideal
    source: Ideal
    verified: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.verified.values())


def _monomials_of_degree(nvars: int, d: int):
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        yield tuple(e)


def degree_multiples(I: Ideal, d: int) -> list[Polynomial]:
    """Spanning set of the degree-d part of I: monomial multiples of the generators."""
    R = I.ring
    out = []
    for g in I.gens:
        gd = g.homogeneous_degree()
        if gd is None:
            raise NotHomogeneous(f"{g} is not homogeneous")
        if gd <= d:
            for m in _monomials_of_degree(R.nvars, d - gd):
                out.append(g.mul_monomial(m))
    return out


def _random_combination(R: PolyRing, span: Sequence[Polynomial], rng: random.Random) -> Polynomial:
    fld = R.field
    acc: dict = {}
    for f in span:
        c = fld.random_element(rng)
        if c:
            for e, v in f.as_dict().items():
                acc[e] = fld.add(acc.get(e, 0), fld.mul(c, v))
    return R.poly(acc)


def find_regular_sequence(I: Ideal, degrees: Sequence[int], seed: int,
                          retries: int = DEFAULT_RETRIES) -> list[Polynomial]:
    """Random combinations of degree-matched multiples of I's generators that
    form a regular sequence, chosen one element at a time."""
    if not I.is_homogeneous():
        raise NotHomogeneous("regular sequences are searched in homogeneous ideals")
    R = I.ring
    rng = random.Random(seed)
    spans = {}
    for d in degrees:
        if d not in spans:
            spans[d] = degree_multiples(I, d)
            if not spans[d]:
                raise RegularSequenceError(f"the ideal has no elements of degree {d}")
    chosen: list[Polynomial] = []
    budget = retries
    for d in degrees:
        while True:
            if budget <= 0:
                raise RegularSequenceError(
                    f"no regular sequence of degrees {tuple(degrees)} found in {retries} tries")
            budget -= 1
            f = _random_combination(R, spans[d], rng)
            if f and is_regular_sequence(chosen + [f]):
                chosen.append(f)
                break
    return chosen


def _lowest_degree_sequence(J: Ideal, g: int, seed: int,
                            retries: int = DEFAULT_RETRIES) -> list[Polynomial]:
    """Regular sequence of length g in J, each element in the lowest degree
    that still extends the sequence (degrees come out ascending)."""
    R = J.ring
    rng = random.Random(seed)
    degs = sorted({f.homogeneous_degree() for f in J.gens})
    top = degs[-1]
    chosen: list[Polynomial] = []
    budget = retries
    lo = degs[0]
    spans: dict = {}
    while len(chosen) < g:
        found = False
        for d in range(lo, top + 1):
            if d not in spans:
                spans[d] = degree_multiples(J, d)
            # a couple of draws per degree; at the top degree keep drawing
            tries = 2 if d < top else budget
            for _ in range(tries):
                if budget <= 0:
                    break
                budget -= 1
                f = _random_combination(R, spans[d], rng)
                if f and is_regular_sequence(chosen + [f]):
                    chosen.append(f)
                    lo = d
                    found = True
                    break
            if found or budget <= 0:
                break
        if not found:
            raise RegularSequenceError("regular sequence search exhausted its retries")
    return chosen


def _check_proper(J: Ideal):
    if not J.is_homogeneous():
        raise NotHomogeneous("the unmixed part is computed for homogeneous ideals")
    if J.is_zero():
        raise ValueError("the zero ideal has no unmixed part here")
    if J.is_unit():
        raise ValueError("the unit ideal has no unmixed part")


def unmixed_part(J: Ideal, seed: int = 0) -> Ideal:
    """Top-dimensional component of J as the double link (z) : ((z) : J)."""
    _check_proper(J)
    g = codim(J)
    z = _lowest_degree_sequence(J, g, seed)
    Z = Ideal(J.ring, z)
    if Z.equals(J):
        return J
    return colon(Z, colon(Z, J))


def is_unmixed(I: Ideal, seed: int = 0) -> bool:
    return I.equals(unmixed_part(I, seed))


def link(I: Ideal, z: Sequence[Polynomial]) -> LinkResult:
    """The link (z) : I, with the defining conditions checked first."""
    z = [I.ring(f) for f in z]
    problems = []
    if not z:
        raise LinkError(["empty sequence"])
    if not all(I.contains(f) for f in z):
        problems.append("sequence is not contained in the ideal")
    if not is_regular_sequence(z):
        problems.append("sequence is not regular")
    if len(z) != codim(I):
        problems.append(f"sequence length {len(z)} differs from the height {codim(I)}")
    if problems:
        raise LinkError(problems)
    Z = Ideal(I.ring, z)
    if Z.equals(I):
        raise LinkError(["the sequence generates the ideal itself"])
    linked = colon(Z, I)
    verified = {
        "contained": True,
        "regular": True,
        "complementary_multiplicity":
            multiplicity(Z) == multiplicity(I) + multiplicity(linked),
    }
    return LinkResult(list(z), linked, I, verified)


def verify_link_pair(A: Ideal, B: Ideal, z: Sequence[Polynomial]) -> dict:
    """Check that A and B are linked by z: each is the colon of (z) by the
    other and the multiplicities add up."""
    z = [A.ring(f) for f in z]
    if A.is_unit() or B.is_unit():
        raise LinkError(["linked ideals must be proper"])
    if not z or not is_regular_sequence(z):
        raise LinkError(["sequence is not regular"])
    if not all(A.contains(f) and B.contains(f) for f in z):
        raise LinkError(["sequence is not contained in both ideals"])
    Z = Ideal(A.ring, z)
    return {
        "A = (z):B": colon(Z, B).equals(A),
        "B = (z):A": colon(Z, A).equals(B),
        "e(z) = e(A) + e(B)": multiplicity(Z) == multiplicity(A) + multiplicity(B),
    }
