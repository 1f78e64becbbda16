"""Truncated u-series with polynomial coefficients."""

from fractions import Fraction
from math import comb, factorial

import pytest

from staralg.poly import Poly
from staralg.series import USeries


def test_constant_and_geometric():
    one = USeries.constant(3, 1)
    assert one.coeffs[0] == Poly.const(1, 1)
    assert all(c.is_zero() for c in one.coeffs[1:])
    tail = USeries.geometric_tail(3, 1)
    assert tail.coeffs[0].is_zero()
    assert all(c == Poly.const(1, 1) for c in tail.coeffs[1:])


def test_mul_truncates():
    # (1 + u)^2 at order 1 keeps only 1 + 2u
    s = USeries(1, (Poly.const(1, 1), Poly.const(1, 1)))
    sq = s * s
    assert sq.coeffs[0] == Poly.const(1, 1)
    assert sq.coeffs[1] == Poly.const(1, 2)


def test_order_mismatch_rejected():
    with pytest.raises(ValueError):
        USeries.constant(2, 1) * USeries.constant(3, 1)


def test_inv_one_minus_u_pow():
    s = USeries.inv_one_minus_u_pow(3, 5, 1)  # (1-u)^-3
    for m in range(6):
        assert s.coeffs[m] == Poly.const(1, comb(m + 2, 2))


def test_exp_requires_zero_constant_term():
    with pytest.raises(ValueError):
        USeries.constant(2, 1).exp()


def test_exp_matches_direct_sum():
    # oracle: exp(s) = sum s^j / j!, truncated; s = z*u + z^2*u^2 here
    z = Poly.z_var(1, 1)
    order = 5
    s = USeries(order, (Poly.zero(1), z, z * z) + tuple(Poly.zero(1) for _ in range(order - 2)))
    direct = USeries.constant(order, 1)
    power = USeries.constant(order, 1)
    for j in range(1, order + 1):
        power = power * s
        direct = direct + power.scale(Fraction(1, factorial(j)))
    assert s.exp() == direct


def test_exp_of_geometric_tail():
    # exp(u/(1-u)) has coefficients sum_j C(m-1, j-1)/j! at order m >= 1
    order = 6
    got = USeries.geometric_tail(order, 1).exp()
    assert got.coeffs[0] == Poly.const(1, 1)
    for m in range(1, order + 1):
        want = sum(Fraction(comb(m - 1, j - 1), factorial(j)) for j in range(1, m + 1))
        assert got.coeffs[m] == Poly.const(1, want)
