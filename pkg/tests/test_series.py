"""Truncated power series and Riordan arrays."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gpaths.errors import TruncationExceeded, ZeroConstantTerm
from gpaths.series import (
    RiordanArray,
    TruncatedSeries,
    big_schroder_series,
    catalan_series,
    guvu_series_at,
    little_schroder_series,
    named_series,
    one_over_1px_series,
    parse_series_expr,
    riordan_entry,
    riordan_matrix,
)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]
SCHRODER = [1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718]
LITTLE = [1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049, 518859]

short_series = st.lists(st.integers(-9, 9), min_size=1, max_size=6).map(
    lambda c: TruncatedSeries(c, 8)
)


def test_coeff_access_and_truncation():
    f = TruncatedSeries([1, 2, 3], 5)
    assert [f.coeff(n) for n in range(6)] == [1, 2, 3, 0, 0, 0]
    assert f.coeff(-1) == 0
    with pytest.raises(TruncationExceeded):
        f.coeff(6)
    assert f.truncate(1).coeff(1) == 2
    with pytest.raises(TruncationExceeded):
        f.truncate(1).coeff(2)


def test_arithmetic_literals():
    x = TruncatedSeries([0, 1], 4)
    one = TruncatedSeries([1], 4)
    geom = (one - x).recip()
    assert [geom.coeff(n) for n in range(5)] == [1, 1, 1, 1, 1]
    assert [(geom * geom).coeff(n) for n in range(5)] == [1, 2, 3, 4, 5]
    assert [(one + x) ** 3] and [(one + x) ** 3][0].coeff(2) == 3
    assert (x * 2).coeff(1) == 2
    assert (geom - geom).coeff(3) == 0


def test_xmul_shifts():
    f = TruncatedSeries([1, 1], 3)
    g = f.xmul(2)
    assert [g.coeff(n) for n in range(4)] == [0, 0, 1, 1]


def test_recip_needs_invertible_constant_term():
    with pytest.raises(ZeroConstantTerm):
        TruncatedSeries([0, 1], 3).recip()
    f = TruncatedSeries([2, 1], 3).recip()
    assert f.coeff(0) == Fraction(1, 2)


@given(short_series)
def test_recip_is_a_right_inverse(f):
    if f.coeff(0) == 0:
        return
    product = f * f.recip()
    assert product.coeff(0) == 1
    assert all(product.coeff(n) == 0 for n in range(1, 9))


@given(short_series, short_series, short_series)
def test_multiplication_is_associative(f, g, h):
    assert (f * g) * h == f * (g * h)


def test_catalan_series():
    f = catalan_series(10)
    assert [f.coeff(n) for n in range(11)] == CATALAN
    # defining equation C = 1 + x C^2
    g = (f * f).xmul(1) + TruncatedSeries([1], 10)
    assert g == f


def test_schroder_series():
    S = big_schroder_series(10)
    s = little_schroder_series(10)
    assert [S.coeff(n) for n in range(11)] == SCHRODER
    assert [s.coeff(n) for n in range(11)] == LITTLE
    # S = 1 + x S + x S^2 and s = 1 + x s S
    assert S == TruncatedSeries([1], 10) + S.xmul(1) + (S * S).xmul(1)
    assert s == TruncatedSeries([1], 10) + (s * S).xmul(1)


def test_one_over_1px():
    f = one_over_1px_series(6)
    assert [f.coeff(n) for n in range(7)] == [1, -1, 1, -1, 1, -1, 1]


def test_named_series_dispatch():
    assert named_series("C", 5).coeff(5) == 42
    assert named_series("S", 5).coeff(5) == 394
    assert named_series("s", 5).coeff(5) == 197
    assert named_series("one_over_1px", 5).coeff(5) == -1
    guvu = named_series("guvu", 4)
    assert guvu.coeff(3).eval_at(1, 1, 1) == 22
    gfull = named_series("gfull", 4)
    assert gfull.coeff(3).eval_at(1, 1, 1) == 29
    with pytest.raises(ValueError):
        named_series("Z", 5)


def test_parse_series_expr():
    f = parse_series_expr("S^2*one_over_1px", 6)
    g = big_schroder_series(6)
    h = one_over_1px_series(6)
    assert f == g * g * h
    assert parse_series_expr("x*S^2", 6).coeff(1) == 1
    assert parse_series_expr("one_plus_x2", 6).coeff(2) == 1
    with pytest.raises(ValueError):
        parse_series_expr("T^2", 6)


def test_riordan_array_shape_rules():
    with pytest.raises(ValueError):
        RiordanArray(parse_series_expr("x", 6), parse_series_expr("x", 6))
    with pytest.raises(ValueError):
        RiordanArray(parse_series_expr("S", 6), parse_series_expr("S", 6))


def test_riordan_pascal():
    # (1/(1-x), x/(1-x)) is Pascal's triangle
    one_minus_x = TruncatedSeries([1, -1], 10)
    d = one_minus_x.recip()
    h = d.xmul(1)
    rows = riordan_matrix(d, h, 5)
    assert rows == [
        [1],
        [1, 1],
        [1, 2, 1],
        [1, 3, 3, 1],
        [1, 4, 6, 4, 1],
        [1, 5, 10, 10, 5, 1],
    ]


def test_riordan_entry_matches_printed_table_value():
    order = 10
    d = parse_series_expr("S^3*one_over_1px", order)
    h = parse_series_expr("x*S^2", order)
    assert riordan_entry(d, h, 6, 2) == 5489
    assert riordan_entry(d, h, 0, 0) == 1
    assert riordan_entry(d, h, 3, 5) == 0
    array = RiordanArray(d, h)
    with pytest.raises(TruncationExceeded):
        array.entry(11, 0)


def test_guvu_series_at_integer_weights():
    f = guvu_series_at(1, 1, 1, order=8)
    assert [f.coeff(n) for n in range(9)] == SCHRODER[:9]
    g = guvu_series_at(0, 1, 1, order=8)
    assert [g.coeff(n) for n in range(9)] == CATALAN[:9]


def test_guvu_series_at_rational_weights():
    from gpaths.enumeration import guvu_coeffs

    point = (Fraction(1, 2), Fraction(2, 3), Fraction(-1, 5))
    f = guvu_series_at(*point, order=7)
    expected = [p.eval_at(*point) for p in guvu_coeffs(7)]
    assert [f.coeff(n) for n in range(8)] == expected
