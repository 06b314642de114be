from fractions import Fraction

import pytest

from markedschemes.marked import generic_parameters
from markedschemes.polys import (
    format_polynomial,
    homogeneous_degree,
    parameter_from_token,
    parse_element,
    parse_polynomial,
)
from markedschemes.rings import QQ, ZZ, ModP, ParameterRing, PrimeField
from support import j3


def test_parse_and_format_round_trip():
    text = "-6*x1^2*x0 + x2*x0^2 - 2*x1*x0^2"
    p = parse_polynomial(text, 3, ZZ)
    assert p == {(1, 2, 0): -6, (2, 0, 1): 1, (2, 1, 0): -2}
    assert format_polynomial(p, ZZ) == text
    assert format_polynomial({}, ZZ) == "0"


def test_parser_expands_products_and_powers():
    p = parse_polynomial("(x2 - x1)^2 - x2*(x2 - 2*x1)", 3, ZZ)
    assert p == {(0, 2, 0): 1}


def test_rational_coefficients():
    p = parse_polynomial("x1/2 + 1/3*x0", 2, QQ)
    assert p == {(0, 1): Fraction(1, 2), (1, 0): Fraction(1, 3)}
    with pytest.raises(ValueError):
        parse_polynomial("x1/x0", 2, QQ)
    assert parse_polynomial("x1/2", 2, PrimeField(5)) == {(0, 1): ModP(3, 5)}


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_polynomial("x1 +", 2, ZZ)
    with pytest.raises(ValueError):
        parse_polynomial("x5", 2, ZZ)
    with pytest.raises(ValueError):
        parse_polynomial("x1 ) x0", 2, ZZ)


def test_homogeneity():
    assert homogeneous_degree(parse_polynomial("x1^2 - x0*x1", 2, ZZ)) == 2
    assert homogeneous_degree({}) is None
    with pytest.raises(ValueError, match="not homogeneous"):
        homogeneous_degree(parse_polynomial("x1^2 - x0", 2, ZZ))


def test_parameter_tokens_agree():
    a = parameter_from_token("C_{011,020}", 3)
    b = parameter_from_token("C[0,1,1|0,2,0]", 3)
    assert a == b
    assert a.head == (0, 1, 1) and a.tail == (0, 2, 0)
    assert a.subscript() == "C_{011,020}"


def test_parameter_polynomials_in_both_styles():
    ring = ParameterRing(generic_parameters(j3()))
    e = parse_element("C_{011,020}^2 - 3*C[0,3,0|1,2,0]", ring, 3)
    assert ring.format(e) == "C_{011,020}^2 - 3*C_{030,120}"
    assert parse_element(ring.format(e, "bracket"), ring, 3) == e


def test_compound_coefficients_are_parenthesized():
    t = ParameterRing(["t"])
    p = parse_polynomial("(t + 1)*x1 - t*x0", 2, t)
    assert format_polynomial(p, t) == "(t + 1)*x1 - t*x0"
