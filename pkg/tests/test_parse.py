from fractions import Fraction as F

import pytest

from ratcurve.multipoly import MPoly
from ratcurve.parse import ParseError, parse_poly, print_mpoly
from ratcurve.qmath import QuadExt


def test_homogeneous_sum():
    p = parse_poly("t0^2+t1^2", ["t0", "t1"])
    assert p.terms == {(2, 0): F(1), (0, 2): F(1)}


def test_gerono_component():
    # 2*t0*t1*(t1^2-t0^2) expands to 2 t0 t1^3 - 2 t0^3 t1
    p = parse_poly("2*t0*t1*(t1^2-t0^2)", ["t0", "t1"])
    assert p.terms == {(1, 3): F(2), (3, 1): F(-2)}


def test_rational_coefficient():
    p = parse_poly("1/2*x - y^3", ["x", "y"])
    assert p.terms == {(1, 0): F(1, 2), (0, 3): F(-1)}


def test_whitespace_insignificant():
    a = parse_poly(" t0 ^ 2 + t1^2 ", ["t0", "t1"])
    b = parse_poly("t0^2+t1^2", ["t0", "t1"])
    assert a == b


def test_leading_minus_and_parens():
    p = parse_poly("-(x-1)^2", ["x"])
    assert p.terms == {(2,): F(-1), (1,): F(2), (0,): F(-1)}


def test_undeclared_variable_with_position():
    with pytest.raises(ParseError) as err:
        parse_poly("x + q", ["x"])
    assert "q" in str(err.value) and "position 4" in str(err.value)


def test_zero_denominator():
    with pytest.raises(ParseError):
        parse_poly("1/0*x", ["x"])


def test_syntax_error_position():
    with pytest.raises(ParseError) as err:
        parse_poly("x + * y", ["x", "y"])
    assert "position" in str(err.value)


def test_sqrt_requires_flag():
    with pytest.raises(ParseError):
        parse_poly("sqrt(2)*x", ["x"])
    p = parse_poly("sqrt(2)*x", ["x"], allow_surd=True)
    assert p.terms[(1,)] == QuadExt(0, 1, 2)


def test_sqrt_negative_radicand():
    p = parse_poly("sqrt(-1)", ["x"], allow_surd=True)
    assert p.constant_value() == QuadExt(0, 1, -1)


def test_print_roundtrip():
    cases = [
        "t0^2+t1^2",
        "-2*t0^3*t1+2*t0*t1^3",
        "1/2*x-y^3",
        "x^4-2*x^2*y+y^2-1",
        "0",
        "-7/3",
    ]
    for s in cases:
        p = parse_poly(s, ["t0", "t1"]) if "t0" in s else parse_poly(s, ["x", "y"])
        names = ["t0", "t1"] if "t0" in s else ["x", "y"]
        printed = print_mpoly(p, names)
        assert print_mpoly(parse_poly(printed, names), names) == printed


def test_print_decreasing_first_variable():
    p = parse_poly("t1^4-t0^4", ["t0", "t1"])
    assert print_mpoly(p, ["t0", "t1"]) == "-t0^4+t1^4"


def test_print_surd_coefficients():
    p = MPoly(2, {(1, 0): QuadExt(1, 2, 5), (0, 0): QuadExt(0, -1, 5)})
    s = print_mpoly(p, ["x", "y"])
    assert s == "(1+2*sqrt(5))*x-sqrt(5)"
    assert parse_poly(s, ["x", "y"], allow_surd=True) == p
