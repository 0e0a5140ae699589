import pytest
from hypothesis import given, strategies as st

from mmp132.errors import ExactDivisionError
from mmp132.series import (
    RationalGF,
    TSeries,
    XPoly,
    catalan,
    catalan_of_tx,
    catalan_series,
    coeff,
    divide_exact,
    expand_rational,
    reciprocal,
    solve_quadratic_fixed_point,
    specialize_x0,
    specialize_x1,
    sqrt_unit,
    ts_const,
    ts_from_json_obj,
    ts_from_tpoly,
    ts_monomial,
    ts_shift_down,
    ts_shift_up,
    ts_to_json_obj,
)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012]


# ---------------------------------------------------------------------------
# XPoly

def test_xpoly_arithmetic():
    x = XPoly((0, 1))
    p = (1 + x) * (1 + x)
    assert p.coeffs == (1, 2, 1)
    assert p.degree == 2
    assert p.coeff(1) == 2 and p.coeff(9) == 0
    assert p.eval_at(3) == 16
    assert (p - p).is_zero


def test_xpoly_exact_div():
    p = XPoly((2, 4, 6))
    assert p.exact_div(2).coeffs == (1, 2, 3)
    with pytest.raises(ExactDivisionError):
        p.exact_div(4)


small_xpolys = st.lists(st.integers(-9, 9), max_size=5).map(lambda c: XPoly(tuple(c)))


@given(small_xpolys, small_xpolys, small_xpolys)
def test_xpoly_ring_laws(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)


# ---------------------------------------------------------------------------
# TSeries basics

def test_catalan_numbers():
    assert [catalan(n) for n in range(13)] == CATALAN


def test_catalan_series_coefficients():
    s = catalan_series(12)
    assert specialize_x1(s) == CATALAN


def test_tseries_min_order_arithmetic():
    a = catalan_series(10)
    b = catalan_series(6)
    assert (a + b).order == 6
    assert (a * b).order == 6
    assert a.truncate(6) == b


def test_tseries_equality_is_strict_about_order():
    assert ts_const(5, 1) != ts_const(6, 1)
    assert ts_const(5, 1) == ts_const(5, 1)


def test_shift_round_trip():
    s = catalan_series(8)
    # up keeps the order (top terms fall off), down lowers it by m
    assert ts_shift_down(ts_shift_up(s, 3), 3) == s.truncate(5)
    with pytest.raises(ExactDivisionError):
        ts_shift_down(ts_const(5, 1), 1)


def test_json_round_trip():
    s = catalan_of_tx(7)
    assert ts_from_json_obj(ts_to_json_obj(s)) == s


# ---------------------------------------------------------------------------
# inversion, division, square roots

unit_series = st.builds(
    lambda sign, tail: ts_from_tpoly(len(tail), [sign] + tail),
    st.sampled_from([1, -1]),
    st.lists(st.integers(-6, 6), min_size=1, max_size=6),
)


@given(unit_series)
def test_reciprocal_inverts(s):
    r = reciprocal(s)
    assert s * r == ts_const(s.order, 1)


@given(unit_series, unit_series)
def test_divide_exact_recovers_quotient(q, d):
    q = q.truncate(min(q.order, d.order))
    d = d.truncate(q.order)
    assert divide_exact(q * d, d) == q


@given(unit_series.filter(lambda s: s.coeff(0) == XPoly((1,))))
def test_sqrt_of_square(s):
    assert sqrt_unit(s * s) == s


def test_sqrt_requires_even_coefficients():
    two_t = ts_from_tpoly(4, [1, 1])
    with pytest.raises(ExactDivisionError):
        sqrt_unit(two_t)  # sqrt(1 + t) needs halves


def test_quadratic_fixed_point_gives_catalan():
    # Q = 1 + t Q^2 rearranged as t Q^2 - Q + 1 = 0
    order = 12
    A = ts_const(order, 1)
    u = ts_monomial(order, 1)
    assert solve_quadratic_fixed_point(A, u) == catalan_series(order)


# ---------------------------------------------------------------------------
# rational generating functions

def test_expand_rational_fibonacci():
    gf = RationalGF((1,), (1, -1, -1))
    assert expand_rational(gf, 9) == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]


def test_rational_gf_validation_and_json():
    with pytest.raises(ExactDivisionError):
        RationalGF((1,), (0, 1))
    gf = RationalGF((1, -2), (1, -3, 1))
    assert RationalGF.from_json_obj(gf.to_json_obj()) == gf


def test_expand_rational_rejects_non_unit_denominator():
    with pytest.raises(ExactDivisionError):
        expand_rational(RationalGF((1,), (2, 1)), 5)


# ---------------------------------------------------------------------------
# specializations

def test_specializations_of_catalan_of_tx():
    s = catalan_of_tx(8)
    assert specialize_x0(s) == [1] + [0] * 8
    assert specialize_x1(s) == CATALAN[:9]


def test_coeff_accessor():
    s = catalan_of_tx(5)
    assert coeff(s, 3) == XPoly((0, 0, 0, 5))
    with pytest.raises(IndexError):
        coeff(s, 6)
