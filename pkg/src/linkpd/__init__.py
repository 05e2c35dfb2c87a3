"""Exact computations with homogeneous polynomial ideals: Groebner bases, ideal
operations, Hilbert series, graded free resolutions and algebraic links."""

from .fields import DEFAULT_PRIME, QQ, FieldSpec, PrimeField, Rationals, field_from_name
from .orders import Block, GrevLex, Lex, MonomialOrder, order_from_name
from .poly import PolyRing, Polynomial, ring
from .groebner import GroebnerBasis, buchberger, normal_form
from .ideal import Ideal, colon, eliminate, intersect, minimalize, power, saturate
from .invariants import (HilbertSeries, NotHomogeneous, codim, dimension, hilbert,
                         is_regular_sequence, leading_ideal, multiplicity)
from .resolution import (BettiTable, FreeResolution, PolyMatrix, betti, check_buchsbaum_eisenbud,
                         minimize, minors, pd_module, pd_quotient, rank, resolve,
                         subquotient_presentation, syzygies)
from .linkage import (LinkError, LinkResult, RegularSequenceError, find_regular_sequence,
                      is_unmixed, link, unmixed_part, verify_link_pair)
from .expr import ParseError, parse_poly, parse_polys

__version__ = "0.1.0"
