"""Acceptance criteria, each checked exactly; every test prints one PASS/FAIL line."""

import random
from math import prod

import pytest

from linkpd import Ideal, PolyRing, QQ
from linkpd.cli import parse, print_script
from linkpd.cli.render import papersuite_scripts
from linkpd.expr import parse_polys
from linkpd.fields import PrimeField
from linkpd.ideal import intersect
from linkpd.invariants import codim, multiplicity
from linkpd.linkage import find_regular_sequence, is_unmixed, unmixed_part, verify_link_pair
from linkpd.papersuite import (PROP34_TYPES, case_checks, lemma33_family, lemma35_ideal,
                               prop34_type, stillman_example, theorem24_harness, verify_all)
from linkpd.resolution import check_buchsbaum_eisenbud, pd_quotient

F = PrimeField(32003)
RUNTIME_BUDGET_SUITE = 120.0
RUNTIME_BUDGET_HARNESS = 300.0


def I_(R, text):
    return Ideal(R, parse_polys(R, text))


def report_line(capsys, label, results):
    """Print one line for the criterion and return the failed sub-checks."""
    failed = [name for name, ok in results if not ok]
    status = "PASS" if not failed else "FAIL"
    detail = f"{len(results)} checks" if not failed else "failed: " + ", ".join(failed)
    with capsys.disabled():
        print(f"\n[acceptance] {label}: {status} ({detail})")
    return failed


@pytest.fixture(scope="module")
def suite_report():
    return verify_all(1, F)


@pytest.fixture(scope="module")
def suite_report_qq():
    return verify_all(1, QQ)


def _criterion1(report):
    eq = [e for e in report.entries if e.kind == "ideal-equality"]
    by_id = {e.check_id: e for e in report.entries}
    quoted = ["link.two-planes.link", "link.double-line.link", "link.triple-linear-colon.link",
              "link.three-planes-height-6.link", "link.alpha-0.link", "link.alpha-1.link",
              "link.alpha-0.back-link", "link.alpha-1.back-link"]
    out = [("all suite checks pass", report.passed),
           (f"at least 25 exact ideal equalities (have {len(eq)})", len(eq) >= 25),
           ("every ideal equality passes", all(e.status == "pass" for e in eq)),
           (f"suite under {RUNTIME_BUDGET_SUITE:.0f}s ({report.runtime:.1f}s)",
            report.runtime < RUNTIME_BUDGET_SUITE)]
    out += [(cid, cid in by_id and by_id[cid].status == "pass") for cid in quoted]
    link_ids = [c.case_id for c in case_checks()]
    out += [(f"{cid}.link", by_id.get(f"{cid}.link") is not None
             and by_id[f"{cid}.link"].status == "pass") for cid in link_ids]
    return out


def test_criterion_1_identity_suite(capsys, suite_report):
    results = _criterion1(suite_report)
    assert not report_line(capsys, "1 identity suite over ZZ/32003", results)


def _criterion2(fld):
    R, _ = PolyRing(["x", "y", "u"], fld), None
    R4 = PolyRing(["x", "y", "u", "v"], fld)
    S = PolyRing(["x", "y", "a", "b"], fld)
    out = [("pd (xy,yu,ux) = 2", pd_quotient(I_(R, "x*y, y*u, u*x")) == 2),
           ("pd (x,yuv) = 2", pd_quotient(I_(R4, "x, y*u*v")) == 2),
           ("pd (x,y)^2+(ax+by) = 3", pd_quotient(I_(S, "x^2, x*y, y^2, a*x + b*y")) == 3)]
    claims = [c for c in case_checks(fld)
              if c.claimed_pd == 3 and c.pd_relation == "==" and c.anchor != "multiplicity-two links"]
    out.append((f"{len(claims)} link quotients claimed pd 3 (expect at least 8)", len(claims) >= 8))
    for c in claims:
        out.append((f"{c.case_id} pd = 3", pd_quotient(c.claimed_link) == 3))
    J = stillman_example(fld)
    out.append(("pd of the three cubics = 4", pd_quotient(J) == 4))
    out.append(("their unmixed part", unmixed_part(J).equals(I_(J.ring, "x^2, x*y, y^2, a*x + b*y"))))
    return out


def test_criterion_2_projective_dimensions(capsys):
    assert not report_line(capsys, "2 projective dimensions", _criterion2(F))


def _criterion3(fld, include_first=False):
    out = []
    es = range(1, 6) if include_first else range(2, 6)
    for e in es:
        I, res = lemma33_family(e, True, fld)
        out += [(f"e={e} acyclic", check_buchsbaum_eisenbud(res)[0]),
                (f"e={e} pd = 3", pd_quotient(I) == 3),
                (f"e={e} multiplicity", multiplicity(I) == e),
                (f"e={e} unmixed", is_unmixed(I))]
        Id, _ = lemma33_family(e, False, fld)
        out.append((f"e={e} degenerate mixed", not is_unmixed(Id)))
    I, res = lemma35_ideal(True, fld)
    out += [("four generators acyclic", check_buchsbaum_eisenbud(res)[0]),
            ("four generators pd <= 3", pd_quotient(I) <= 3),
            ("four generators multiplicity 3", multiplicity(I) == 3),
            ("four generators unmixed", is_unmixed(I)),
            ("four generators degenerate mixed", not is_unmixed(lemma35_ideal(False, fld)[0]))]
    return out


def test_criterion_3_power_plus_form_family(capsys):
    assert not report_line(capsys, "3 explicit complexes (e = 2..5)", _criterion3(F))


@pytest.mark.xfail(strict=True, reason="for e = 1 the form ax+by lies in (x,y) = (x,y)^1, so the "
                                       "ideal is the complete intersection (x,y) with pd 2 and no "
                                       "degenerate variant can be mixed")
def test_criterion_3_first_power(capsys):
    I, res = lemma33_family(1, True, F)
    Id, _ = lemma33_family(1, False, F)
    results = [("e=1 acyclic", check_buchsbaum_eisenbud(res)[0]),
               ("e=1 pd = 3", pd_quotient(I) == 3),
               ("e=1 multiplicity", multiplicity(I) == 1),
               ("e=1 unmixed", is_unmixed(I)),
               ("e=1 degenerate mixed", not is_unmixed(Id))]
    assert not report_line(capsys, "3 explicit complexes (e = 1)", results)


def _criterion4(fld):
    out = []
    for t in PROP34_TYPES:
        I = prop34_type(t, fld)
        out += [(f"{t} height 2", codim(I) == 2), (f"{t} multiplicity 2", multiplicity(I) == 2),
                (f"{t} unmixed", is_unmixed(I)), (f"{t} pd <= 3", pd_quotient(I) <= 3)]
    return out


def test_criterion_4_multiplicity_two(capsys):
    assert not report_line(capsys, "4 multiplicity-two types", _criterion4(F))


def test_criterion_5_link_bound_harness(capsys):
    import time
    t0 = time.perf_counter()
    records = theorem24_harness(50, seed=1, fld=F)
    elapsed = time.perf_counter() - t0
    results = [(f"instance {r.index} ({r.family})", r.holds) for r in records]
    results.append(("50 instances", len(records) == 50))
    results += [(f"instance {r.index} shape", r.nvars <= 6 and len(r.degrees) == 3
                 and max(r.degrees) <= 3 and r.height == 2) for r in records]
    results.append(("some instance has pd >= 4", any(r.pd_j >= 4 for r in records)))
    results.append((f"under {RUNTIME_BUDGET_HARNESS:.0f}s ({elapsed:.1f}s)", elapsed < RUNTIME_BUDGET_HARNESS))
    assert not report_line(capsys, "5 pd bound through a link, 50 instances", results)


def _mixed_instance(seed):
    rng = random.Random(seed)
    R = PolyRing(["x", "y", "z", "w", "s"], F)
    host = Ideal(R, R.gens())
    degs = sorted(rng.randint(1, 3) for _ in range(2))
    A = Ideal(R, find_regular_sequence(host, degs, rng.randrange(10 ** 6)))
    B = Ideal(R, find_regular_sequence(host, [1, 1, 1], rng.randrange(10 ** 6)))
    return A, intersect(A, B)


def test_criterion_6_multiplicity_laws(capsys):
    results = []
    rng = random.Random(6)
    for k in range(20):
        nvars = rng.randint(3, 5)
        R = PolyRing([f"x{i}" for i in range(nvars)], F)
        g = rng.randint(1, min(3, nvars))
        degs = [rng.randint(1, 3) for _ in range(g)]
        z = find_regular_sequence(Ideal(R, R.gens()), degs, rng.randrange(10 ** 6))
        results.append((f"Bezout {degs}", multiplicity(Ideal(R, z)) == prod(degs)))
    for k in range(20):
        A, J = _mixed_instance(100 + k)
        U = unmixed_part(J, k)
        results.append((f"mixed {k} unmixed part", U.equals(A) and not J.equals(A)))
        results.append((f"mixed {k} multiplicity", multiplicity(J) == multiplicity(U)))
    for c in case_checks(F):
        rep = verify_link_pair(c.source, c.claimed_link, c.z)
        results.append((f"{c.case_id} complementary", rep["e(z) = e(A) + e(B)"]))
    assert not report_line(capsys, "6 multiplicity laws", results)


def test_criterion_7_canonicality(capsys, suite_report):
    results = []
    rng = random.Random(7)
    R = PolyRing(["x", "y", "z", "w", "s"], F)
    from linkpd.papersuite import _random_form
    for k in range(100):
        gens = [_random_form(R, rng.randint(1, 3), rng, rng.sample(range(5), 3))
                for _ in range(rng.randint(1, 4))]
        I = Ideal(R, gens)
        perm = gens[:]
        rng.shuffle(perm)
        J = Ideal(R, [g.scale(rng.randint(1, 1000)) for g in perm])
        results.append((f"permutation {k}", list(I.gb()) == list(J.gb())))
    for name, text in papersuite_scripts(F).items():
        s = parse(text)
        printed = print_script(s)
        results.append((f"round trip {name}", print_script(parse(printed)) == printed
                        and parse(printed) == s))
    again = verify_all(1, F)
    results.append(("same seed, byte-identical report", again.to_json() == suite_report.to_json()))
    other = verify_all(2, F)
    results.append(("seed 2, same pass/fail vector", other.status_vector() == suite_report.status_vector()))
    assert not report_line(capsys, "7 canonicality", results)


def test_criterion_8_characteristic_robustness(capsys, suite_report, suite_report_qq):
    results = [("suite vector over QQ", suite_report_qq.status_vector() == suite_report.status_vector())]
    for label, fn in (("criterion 2", _criterion2), ("criterion 3", _criterion3),
                      ("criterion 4", _criterion4)):
        a = [ok for _, ok in fn(F)]
        b = [ok for _, ok in fn(QQ)]
        results.append((f"{label} vector over QQ", a == b))
    c1f = [ok for _, ok in _criterion1(suite_report)[:3]]
    c1q = [ok for _, ok in _criterion1(suite_report_qq)[:3]]
    results.append(("criterion 1 vector over QQ", c1f == c1q))
    assert not report_line(capsys, "8 characteristic robustness", results)
