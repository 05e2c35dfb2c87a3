import pytest

from linkpd import Ideal
from linkpd.expr import parse_polys
from linkpd.invariants import codim, multiplicity
from linkpd.linkage import is_unmixed, unmixed_part
from linkpd.papersuite import (case_checks, final_theorem_chain, lemma33_family,
                               lemma35_ideal, prop34_type, random_height_two, stillman_example,
                               theorem24_instance, triple_structure_example)
from linkpd.resolution import check_buchsbaum_eisenbud, pd_quotient


def test_power_plus_form_edge_case():
    I, res = lemma33_family(1)
    assert I.equals(Ideal(I.ring, parse_polys(I.ring, "x, y")))
    assert res.maps[2].ncols == 0
    assert res.composites_vanish()
    assert check_buchsbaum_eisenbud(res)[0]


def test_power_plus_form_e2():
    I, res = lemma33_family(2)
    assert check_buchsbaum_eisenbud(res)[0]
    assert multiplicity(I) == 2 and is_unmixed(I) and pd_quotient(I) == 3


def test_power_plus_form_degenerate_e3():
    I, _ = lemma33_family(3, generic=False)
    # (x, y, a, b) drops to height three: c kills both coefficients
    assert codim(I + Ideal(I.ring, parse_polys(I.ring, "c*a1, c*b1"))) == 3
    assert not is_unmixed(I)


def test_power_plus_form_rejects_bad_e():
    with pytest.raises(ValueError):
        lemma33_family(0)


def test_four_generator_ideal():
    I, res = lemma35_ideal(True)
    assert check_buchsbaum_eisenbud(res)[0]
    assert pd_quotient(I) <= 3 and multiplicity(I) == 3 and is_unmixed(I)
    Iv, _ = lemma35_ideal(True, specialize_v=True)
    assert multiplicity(Iv) == 3 and is_unmixed(Iv)
    Id, _ = lemma35_ideal(False)
    assert not is_unmixed(Id)


@pytest.mark.parametrize("t, pd", [("i", 2), ("ii", 2), ("iii", 3), ("iv", 3), ("iv0", 2)])
def test_multiplicity_two_types(t, pd):
    I = prop34_type(t)
    assert codim(I) == 2 and multiplicity(I) == 2 and is_unmixed(I)
    assert pd_quotient(I) == pd


def test_type_name_with_degree_sign():
    assert prop34_type("iv°").equals(prop34_type("iv0"))
    with pytest.raises(ValueError):
        prop34_type("v")


def test_triple_structure():
    I = triple_structure_example()
    assert multiplicity(I) == 3 and is_unmixed(I)


def test_case_list_is_instantiated():
    cases = case_checks()
    ids = [c.case_id for c in cases]
    assert len(ids) == len(set(ids))
    five = next(c for c in cases if c.case_id == "link.three-planes-height-5")
    R = five.source.ring
    assert five.claimed_link.equals(Ideal(R, parse_polys(R, "x*y, x*v, y*u*s, v*u*s")))


def test_stillman_example():
    J = stillman_example()
    assert pd_quotient(J) == 4
    assert unmixed_part(J).equals(Ideal(J.ring, parse_polys(J.ring, "x^2, x*y, y^2, a*x + b*y")))


def test_final_chain():
    rows = final_theorem_chain(1)
    assert all(ok for _, ok, _ in rows), rows
    mult = next(d for label, _, d in rows if label.startswith("multiplicities"))
    assert mult == "(5, 4, 2, 2)"


def test_quadric_in_unmixed_part_bounds_pd():
    # every suite ideal whose unmixed part holds a quadric has pd at most 4
    checked = 0
    candidates = [stillman_example(), prop34_type("iv"), prop34_type("iii")]
    candidates += [c.source for c in case_checks()]
    for J in candidates:
        U = unmixed_part(J)
        if any(g.homogeneous_degree() == 2 for g in U.gb()):
            assert pd_quotient(J) <= 4
            checked += 1
    assert checked >= 5


def test_random_height_two_is_reproducible():
    fam1, J1 = random_height_two(3, seed=5)
    fam2, J2 = random_height_two(3, seed=5)
    assert fam1 == fam2 and list(J1.gb()) == list(J2.gb())
    assert len(J1.gens) == 3 and codim(J1) == 2
    assert all(g.homogeneous_degree() <= 3 for g in J1.gens)


def test_harness_instance():
    r = theorem24_instance(3, seed=1)
    assert r.holds and r.pd_j == 4 and r.pd_link == 3
