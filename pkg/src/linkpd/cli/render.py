"""Write engine objects back out as scripts."""

from __future__ import annotations

from ..ideal import Ideal
from ..papersuite import (PROP34_TYPES, case_checks, lemma33_family, lemma35_ideal, prop34_type,
                          stillman_example, triple_structure_example)
from ..poly import PolyRing


def ring_text(R: PolyRing) -> str:
    order = "" if R.order.name == "grevlex" else f" order {R.order.name}"
    return f"ring {R.field!r}[{','.join(R.var_names)}]{order};"


def ideal_text(I: Ideal) -> str:
    return ", ".join(str(g) for g in I.gens) if I.gens else "0"


def render_script(R: PolyRing, ideals: dict, commands: list[str]) -> str:
    lines = [ring_text(R)]
    lines += [f"ideal {name} = {ideal_text(I)};" for name, I in ideals.items()]
    lines += commands
    return "\n".join(lines) + "\n"


def papersuite_scripts(fld=None) -> dict[str, str]:
    """One script per explicit ideal of the verification suite."""
    out: dict[str, str] = {}
    for t in PROP34_TYPES:
        I = prop34_type(t, fld)
        out[f"mult2-{t}"] = render_script(I.ring, {"I": I},
                                          ["codim(I);", "mult(I);", "isunmixed(I);", "pd(I);"])
    for e in range(1, 6):
        for generic in (True, False):
            I, _ = lemma33_family(e, generic, fld)
            tag = "generic" if generic else "degenerate"
            out[f"power-plus-form-e{e}-{tag}"] = render_script(
                I.ring, {"I": I}, ["mult(I);", "isunmixed(I);", "pd(I);"])
    for variant in (True, False):
        I, _ = lemma35_ideal(variant, fld)
        out[f"four-generator-{'generic' if variant else 'degenerate'}"] = render_script(
            I.ring, {"I": I}, ["mult(I);", "isunmixed(I);", "pd(I);"])
    I = triple_structure_example(fld)
    out["triple-structure"] = render_script(I.ring, {"I": I}, ["mult(I);", "isunmixed(I);"])
    J = stillman_example(fld)
    out["pd-four"] = render_script(J.ring, {"J": J}, ["pd(J);", "unmixed(J);"])
    for case in case_checks(fld):
        src = case.aux_source if case.aux_source is not None else case.source
        Z = Ideal(src.ring, case.z)
        out[case.case_id] = render_script(src.ring, {"I": src, "Z": Z, "L": case.claimed_link},
                                          ["colon(Z, I);", "pd(L);"])
    return out
