"""Exact jumping numbers of monomial ideals, nondegenerate hypersurfaces and graded families."""

from .algebra import MonomialIdeal, Rational, SparsePolynomial, format_rational, parse_rational
from .hypersurface import divisor_jumps, jumping_length, nondegeneracy_check, term_ideal
from .jacobian import ar_bounds, milnor, tyurina
from .jumping import JumpSpectrum, jumps_upto, lct, multiplier_ideal
from .newton import newton_polyhedron

__all__ = [
    "JumpSpectrum",
    "MonomialIdeal",
    "Rational",
    "SparsePolynomial",
    "ar_bounds",
    "divisor_jumps",
    "format_rational",
    "jumping_length",
    "jumps_upto",
    "lct",
    "milnor",
    "multiplier_ideal",
    "newton_polyhedron",
    "nondegeneracy_check",
    "parse_rational",
    "term_ideal",
    "tyurina",
]
