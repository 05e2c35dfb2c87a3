import os
from itertools import combinations_with_replacement

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from linkpd import Ideal, PolyRing
from linkpd.fields import QQ, PrimeField

settings.register_profile(
    "default", deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.register_profile("quick", deadline=None, max_examples=10,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

F = PrimeField(32003)


def monomials(nvars, d):
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


@st.composite
def forms(draw, R, degree, max_terms=4):
    """A nonzero homogeneous polynomial with a few small-integer terms."""
    mons = monomials(R.nvars, degree)
    chosen = draw(st.lists(st.sampled_from(mons), min_size=1, max_size=max_terms, unique=True))
    coeffs = draw(st.lists(st.integers(-5, 5).filter(bool), min_size=len(chosen),
                           max_size=len(chosen)))
    return R.poly(dict(zip(chosen, coeffs)))


@st.composite
def polys(draw, R, max_degree=3, max_terms=5):
    """An arbitrary (possibly inhomogeneous, possibly zero) polynomial."""
    mons = [m for d in range(max_degree + 1) for m in monomials(R.nvars, d)]
    chosen = draw(st.lists(st.sampled_from(mons), max_size=max_terms, unique=True))
    coeffs = draw(st.lists(st.integers(-5, 5), min_size=len(chosen), max_size=len(chosen)))
    return R.poly(dict(zip(chosen, coeffs)))


@st.composite
def ideals(draw, R, max_gens=3, max_degree=3, max_terms=3):
    n = draw(st.integers(1, max_gens))
    gens = [draw(forms(R, draw(st.integers(1, max_degree)), max_terms)) for _ in range(n)]
    return Ideal(R, gens)


def ring_of(names, field=F, order=None):
    return PolyRing(names.split(","), field, order)


FIELDS = [F, QQ]
