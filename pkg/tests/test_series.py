from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from thetagw.series import (
    TruncatedSeries,
    WLaurent,
    ZMonomial,
    sqrt_coeff,
    wlaurent_nonneg_check,
)


def series_of(*coeffs, order=None):
    return TruncatedSeries(coeffs, order)


def test_mul_basic():
    a = series_of(1, 1, order=3)   # 1 + z
    b = series_of(1, -1, order=3)  # 1 - z
    assert a * b == series_of(1, 0, -1, order=3)


def test_mul_order_additivity():
    for k in (1, 2, 5):
        zk = TruncatedSeries.monomial(1, k, 2 * k + 1)
        prod = zk * zk
        assert prod.z_order() == 2 * k
        assert prod.coeffs[2 * k] == 1


def test_obstruction_term_leading_coefficient():
    # z * B_k^2 with B_k = (-4)^{-k} z^k has leading term 4^{-2k} z^{2k+1}
    for k in range(1, 5):
        order = 2 * k + 2
        bk = TruncatedSeries.monomial(Fraction(-1, 4) ** k, k, order)
        z = TruncatedSeries.monomial(1, 1, order)
        prod = z * bk * bk
        assert prod.z_order() == 2 * k + 1
        assert prod.coeffs[2 * k + 1] == Fraction(1, 4 ** (2 * k))


def test_truncation_is_min_of_operand_orders():
    a = series_of(1, 2, 3, order=3)
    b = series_of(1, 1, order=2)
    assert (a + b).order == 2
    assert (a * b).order == 2
    assert (a - b).order == 2


def test_z_order_sentinel():
    assert TruncatedSeries.zero(4).z_order() is None
    assert series_of(0, 0, 5, order=4).z_order() == 2


def test_is_zero_mod():
    s = TruncatedSeries.monomial(1, 2, 4)  # z^2
    assert s.is_zero_mod(2)
    assert not s.is_zero_mod(3)
    with pytest.raises(ValueError):
        s.is_zero_mod(5)


def _binomial_half(j):
    """(-1)^j * C(1/2, j): the independent route to the sqrt coefficients."""
    num = Fraction(1)
    for i in range(j):
        num *= Fraction(1, 2) - i
    return num / factorial(j) * (-1) ** j


def test_sqrt_coeff_examples():
    assert sqrt_coeff(0) == ZMonomial(Fraction(1), 0)
    assert sqrt_coeff(1) == ZMonomial(Fraction(-1, 2), 1)
    assert sqrt_coeff(2) == ZMonomial(Fraction(-1, 8), 2)


def test_sqrt_coeff_matches_generalized_binomial():
    for j in range(33):
        mono = sqrt_coeff(j)
        assert mono.coeff == _binomial_half(j)
        assert mono.exp == j


@pytest.mark.parametrize("J", [1, 2, 4, 8, 16])
def test_sqrt_truncation_squares_to_one_minus_z_over_w(J):
    order = J + 2
    root = WLaurent({-j: sqrt_coeff(j).as_series(order) for j in range(J + 1)})
    square = root * root
    one = TruncatedSeries.one(order)
    minus_z = TruncatedSeries.monomial(-1, 1, order)
    for e in square.exponents():
        if e < -J:
            continue  # beyond the reliable window of the truncation
        if e == 0:
            assert square.coefficient(e) == one
        elif e == -1:
            assert square.coefficient(e) == minus_z
        else:
            assert square.coefficient(e) is None or square.coefficient(e).z_order() is None


def test_wlaurent_nonneg_check_examples():
    order = 4
    one = TruncatedSeries.one(order)
    p = WLaurent({1: one, 0: one})  # w + 1
    assert wlaurent_nonneg_check(p, order)
    q = WLaurent({-1: TruncatedSeries.monomial(1, 2, order)})  # z^2 w^{-1}
    assert wlaurent_nonneg_check(q, 2)
    assert not wlaurent_nonneg_check(q, 3)


def test_wlaurent_drops_zero_terms_and_adds_degrees():
    order = 3
    z = TruncatedSeries.monomial(1, 1, order)
    p = WLaurent({2: z, 0: TruncatedSeries.zero(order)})
    assert p.exponents() == [2]
    q = WLaurent({-1: z})
    prod = p * q
    assert prod.exponents() == [1]
    assert prod.coefficient(1) == z * z


rationals = st.fractions(
    min_value=Fraction(-4), max_value=Fraction(4), max_denominator=8
)


@st.composite
def truncated_series(draw, max_order=32):
    order = draw(st.integers(1, max_order))
    coeffs = draw(st.lists(rationals, min_size=order, max_size=order))
    return TruncatedSeries(coeffs, order)


@settings(max_examples=120, deadline=None)
@given(truncated_series(), truncated_series(), truncated_series())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@settings(max_examples=120, deadline=None)
@given(truncated_series(), truncated_series())
def test_z_order_additive_under_product(a, b):
    za, zb = a.z_order(), b.z_order()
    prod = a * b
    if za is not None and zb is not None and za + zb < prod.order:
        assert prod.z_order() == za + zb


def test_repr_is_readable():
    s = series_of(1, Fraction(-1, 2), 0, order=4)
    assert repr(s) == "1 + -1/2*z + O(z^4)"
    assert repr(TruncatedSeries.zero(2)) == "0 + O(z^2)"
