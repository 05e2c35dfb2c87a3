import random
from math import prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ideals, monomials, ring_of
from linkpd import Ideal, Lex, NotHomogeneous, ring
from linkpd.expr import parse_polys
from linkpd.ideal import intersect
from linkpd.invariants import (codim, dimension, hilbert, is_regular_sequence, leading_ideal,
                               multiplicity)
from linkpd.linkage import find_regular_sequence
from linkpd.papersuite import lemma33_family


def I_(R, text):
    return Ideal(R, parse_polys(R, text))


def brute_hilbert_function(I, upto):
    """Count monomials of each degree outside the leading ideal."""
    lead = [g.lm for g in I.gb()]
    out = []
    for d in range(upto + 1):
        out.append(sum(1 for m in monomials(I.ring.nvars, d)
                       if not any(all(a <= b for a, b in zip(l, m)) for l in lead)))
    return out


R, (x, y, u, v) = ring("x,y,u,v")


def test_leading_ideal_examples():
    K = I_(R, "x*u, x*v, y*u, y*v")
    assert leading_ideal(K).equals(K)
    S, _ = ring("x,y,a,b")
    L = leading_ideal(I_(S, "x^2, x*y, y^2, a*x + b*y"))
    assert all(L.contains(m) for m in parse_polys(S, "x^2, x*y, y^2, x*a"))
    assert leading_ideal(Ideal(R, [])).is_zero()


def test_codim_and_multiplicity_examples():
    K = I_(R, "x*u, x*v, y*u, y*v")
    assert codim(K) == 2 and multiplicity(K) == 2
    for e in range(1, 6):
        I, _ = lemma33_family(e)
        assert multiplicity(I) == e


def test_quadric_cubic_complete_intersection():
    assert multiplicity(I_(R, "x^2 + y*u, y^3 - u*v^2")) == 6


def test_regular_cubics_have_height_three():
    assert codim(I_(R, "x^3, y^3 + x*u^2, u^3 - v^3")) == 3


def test_sentinels_and_errors():
    assert dimension(Ideal(R, [R.one()])) == -1
    assert dimension(Ideal(R, [])) == 4
    with pytest.raises(NotHomogeneous):
        hilbert(I_(R, "x^2 + y"))
    with pytest.raises(ValueError):
        multiplicity(Ideal(R, [R.one()]))


def test_hilbert_series_text():
    S, _ = ring("x,y,a,b")
    assert str(hilbert(I_(S, "x^2, x*y, y^2, a*x + b*y"))) == "(1 + 2*t - t^2) / (1 - t)^2"


def test_regular_sequence_examples():
    S, _ = ring("x,y,a,b")
    assert is_regular_sequence(parse_polys(S, "x, y, a, b"))
    assert not is_regular_sequence(parse_polys(S, "x, x*y"))
    assert is_regular_sequence(parse_polys(S, "x^2, y^3"))
    with pytest.raises(ValueError):
        is_regular_sequence([])
    with pytest.raises(NotHomogeneous):
        is_regular_sequence(parse_polys(S, "x + 1"))


def test_additivity_instances():
    assert multiplicity(intersect(I_(R, "x, y"), I_(R, "u, v"))) == 2
    assert multiplicity(intersect(intersect(I_(R, "x, y"), I_(R, "y, u")), I_(R, "u, x"))) == 3
    T, _ = ring("x,y,u,v,s")
    assert multiplicity(intersect(intersect(I_(T, "x, y"), I_(T, "u, v")), I_(T, "v, s"))) == 3


R3 = ring_of("x,y,z")
R4 = ring_of("x,y,z,w")


@settings(max_examples=30)
@given(ideals(R3))
def test_hilbert_function_matches_standard_monomial_count(I):
    hs = hilbert(I)
    assert hs.coefficients(6) == brute_hilbert_function(I, 6)


@settings(max_examples=30)
@given(ideals(R3))
def test_multiplicity_and_dimension_order_invariant(I):
    J = Ideal(R3.with_order(Lex()), [g.to_ring(R3.with_order(Lex())) for g in I.gens])
    a, b = hilbert(I), hilbert(J)
    assert a.dim == b.dim
    if a.dim >= 0:
        assert a.multiplicity == b.multiplicity
    # the Hilbert function itself is order-independent
    assert a.coefficients(5) == b.coefficients(5)


def _random_complete_intersection(rng, nvars, degrees):
    R = ring_of(",".join(f"x{i}" for i in range(nvars)))
    host = Ideal(R, R.gens())
    return find_regular_sequence(host, degrees, rng.randrange(10 ** 6)), R


@pytest.mark.parametrize("case", range(20))
def test_bezout_on_random_complete_intersections(case):
    rng = random.Random(1000 + case)
    nvars = rng.randint(3, 5)
    g = rng.randint(1, min(3, nvars))
    degrees = sorted(rng.randint(1, 3) for _ in range(g))
    fs, R = _random_complete_intersection(rng, nvars, degrees)
    I = Ideal(R, fs)
    assert codim(I) == g
    assert multiplicity(I) == prod(degrees)


@settings(max_examples=20)
@given(ideals(R4, max_gens=2, max_degree=2), st.integers(0, 10 ** 6))
def test_multiplicity_monotone_under_inclusion(I, seed):
    if I.is_unit():
        return
    c = codim(I)
    rng = random.Random(seed)
    # J ⊆ I of the same height: products of generators with random forms
    J = Ideal(I.ring, [g * R4.poly({m: rng.randint(1, 9) for m in monomials(4, 1)[:2]})
                       for g in I.gens] + [g * g for g in I.gens])
    if J.is_zero() or codim(J) != c:
        return
    assert multiplicity(J) >= multiplicity(I)
