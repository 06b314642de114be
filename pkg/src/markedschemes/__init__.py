"""Marked bases over strongly stable ideals, marked schemes and Groebner strata."""

from .equations import (
    embedding_report,
    generic_family,
    groebner_stratum_equations,
    marked_scheme_equations,
    stratum_membership_demo,
)
from .hilbert import hilbert_data
from .ideals import MonomialIdeal, StableIdeal, is_strongly_stable, minimalize
from .marked import (
    MarkedSet,
    Reducer,
    auxiliary_basis,
    build_marked_set,
    degree_bound_basis_test,
    degree_slice,
    ek_pairs,
    extract_marked_set,
    is_marked_basis,
    obstructions,
    parse_marked_set,
    reduce,
)
from .monomials import TermOrder, borel_geq, compare
from .polys import format_polynomial, parse_polynomial
from .rings import QQ, ZZ, ParameterRing, PrimeField, RingHomomorphism, parse_ring

__all__ = [
    "MarkedSet",
    "Reducer",
    "MonomialIdeal",
    "ParameterRing",
    "PrimeField",
    "QQ",
    "RingHomomorphism",
    "StableIdeal",
    "TermOrder",
    "ZZ",
    "auxiliary_basis",
    "borel_geq",
    "build_marked_set",
    "compare",
    "degree_bound_basis_test",
    "degree_slice",
    "ek_pairs",
    "embedding_report",
    "extract_marked_set",
    "format_polynomial",
    "generic_family",
    "groebner_stratum_equations",
    "hilbert_data",
    "is_marked_basis",
    "is_strongly_stable",
    "marked_scheme_equations",
    "minimalize",
    "obstructions",
    "parse_marked_set",
    "parse_polynomial",
    "parse_ring",
    "reduce",
    "stratum_membership_demo",
]
