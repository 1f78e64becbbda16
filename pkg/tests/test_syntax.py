"""Expression parsing and canonical printing."""

from fractions import Fraction

import pytest
from hypothesis import given, settings

from staralg.poly import Poly
from staralg.syntax import ParseError, format_poly, parse_poly, parse_weyl
from staralg.weyl import WeylOp, right_symbol

from conftest import polys


def xi(n=1, i=1):
    return Poly.xi_var(n, i)


def z(n=1, i=1):
    return Poly.z_var(n, i)


# -- parsing -------------------------------------------------------------------

def test_parse_symbol_polynomial():
    got = parse_poly("x1^3*z1^2 - 6*x1^2*z1 + 6*x1", 1)
    assert got == xi() ** 3 * z() ** 2 - 6 * xi() ** 2 * z() + 6 * xi()


def test_parse_constant_in_two_vars():
    assert parse_poly("1", 2) == Poly.const(2, 1)
    assert parse_poly("0", 2) == Poly.zero(2)


def test_parse_square_of_difference():
    assert parse_poly("(x1 - z1)^2", 1) == xi() ** 2 - 2 * xi() * z() + z() ** 2


def test_parse_rational_literals():
    assert parse_poly("1/2*z1^2", 1) == z() ** 2 / 2
    assert parse_poly("3/4", 1) == Poly.const(1, Fraction(3, 4))
    assert parse_poly("2^3", 1) == Poly.const(1, 8)


def test_parse_unary_minus_binds_tighter_than_product():
    assert parse_poly("-x1*z1", 1) == -(xi() * z())
    assert parse_poly("2*-3", 1) == Poly.const(1, -6)
    assert parse_poly("--x1", 1) == xi()


def test_parse_whitespace_insignificant():
    assert parse_poly("  x1 +\n z1\t", 2) == xi(2) + z(2)


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_poly("x1 + + z1", 1)
    assert err.value.line == 1 and err.value.column == 6

    with pytest.raises(ParseError, match="out of range"):
        parse_poly("z3", 2)
    with pytest.raises(ParseError, match="negative exponent"):
        parse_poly("x1^-2", 1)
    with pytest.raises(ParseError, match="rational literal"):
        parse_poly("x1/2", 1)
    with pytest.raises(ParseError, match="trailing input"):
        parse_poly("2x1", 1)  # juxtaposition is not multiplication
    with pytest.raises(ParseError, match="needs a 1-based index"):
        parse_poly("x + 1", 1)
    with pytest.raises(ParseError, match="not allowed"):
        parse_poly("d1", 1)  # derivations only exist in operator expressions
    with pytest.raises(ParseError, match="zero denominator"):
        parse_poly("1/0", 1)
    with pytest.raises(ParseError, match="unexpected character"):
        parse_poly("x1 & z1", 1)


def test_parse_weyl_examples():
    op = parse_weyl("z1^2*d1^3", 1)
    assert op == WeylOp(1, {(3,): z() ** 2})
    assert parse_weyl("d1*z1", 1) == WeylOp(1, {(1,): z(), (0,): Poly.const(1, 1)})
    assert parse_weyl("1", 1) == WeylOp.identity(1)
    assert parse_weyl("D1*z1", 1) == parse_weyl("d1*z1", 1)


def test_parse_weyl_product_is_composition():
    # z1*d1 and d1*z1 differ by the commutation relation
    assert right_symbol(parse_weyl("z1*d1", 1)) == xi() * z()
    assert right_symbol(parse_weyl("d1*z1", 1)) == xi() * z() + Poly.const(1, 1)


def test_parse_weyl_rejects_x_vars():
    with pytest.raises(ParseError, match="not allowed in operator"):
        parse_weyl("x1*d1", 1)


# -- printing ------------------------------------------------------------------

def test_print_examples():
    assert format_poly(Poly.zero(1)) == "0"
    assert format_poly(xi() * z() - Poly.const(1, 1)) == "x1*z1 - 1"
    symbol = xi() ** 3 * z() ** 2 - 6 * xi() ** 2 * z() + 6 * xi()
    assert format_poly(symbol) == "x1^3*z1^2 - 6*x1^2*z1 + 6*x1"
    assert format_poly(z() ** 2 / 2 - 2 * z() + Poly.const(1, 1)) == "1/2*z1^2 - 2*z1 + 1"


def test_print_descending_grlex_with_ties():
    p = xi() ** 2 + xi() * z() + z() ** 2 + xi() + z()
    assert format_poly(p) == "x1^2 + x1*z1 + z1^2 + x1 + z1"


def test_print_negative_leading_term():
    assert format_poly(-xi() + Poly.const(1, 1)) == "-x1 + 1"
    assert format_poly(-xi() - z()) == "-x1 - z1"


def test_print_coefficient_one_elision():
    assert format_poly(Poly.const(1, 1)) == "1"
    assert format_poly(Poly.const(1, -1)) == "-1"
    assert format_poly(xi(2, 2) * z(2, 1)) == "x2*z1"


@settings(max_examples=80, deadline=None)
@given(polys())
def test_round_trip_parse_print(p):
    assert parse_poly(format_poly(p), p.n) == p


@settings(max_examples=60, deadline=None)
@given(polys())
def test_print_idempotent_on_canonical_strings(p):
    text = format_poly(p)
    assert format_poly(parse_poly(text, p.n)) == text
