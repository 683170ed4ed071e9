"""Laurent polynomials and rational functions."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reflgroups.cyclotomic import zeta
from reflgroups.poly import LaurentPoly, RationalFunction, x_poly

x = x_poly()


def test_common_factor_cancels():
    rf = RationalFunction.of(x ** 2 - 1, x - 1)
    assert rf.is_polynomial()
    assert rf.as_poly() == x + 1


def test_partial_fraction_sum():
    a = RationalFunction.of(LaurentPoly.one(), 1 - x)
    b = RationalFunction.of(LaurentPoly.one(), 1 + x)
    assert a + b == RationalFunction.of(LaurentPoly.const(2), 1 - x ** 2)


def test_zero_over_anything():
    rf = RationalFunction.of(LaurentPoly.zero(), x ** 3 + 1)
    assert rf.is_zero()
    assert rf.den == 1


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RationalFunction.of(x, LaurentPoly.zero())


def test_den_monic_and_reduced():
    rf = RationalFunction.of(2 * x + 2, 4 * x ** 2 - 4)
    assert rf.den.leading_coeff() == 1
    assert rf.num.gcd_poly(rf.den).degree() == 0


polys = st.builds(
    lambda coeffs: LaurentPoly({e: c for e, c in enumerate(coeffs)}),
    st.lists(st.integers(-3, 3), min_size=1, max_size=5))


@settings(max_examples=50, deadline=None)
@given(polys, polys, polys, polys)
def test_equality_matches_cross_multiplication(a, b, c, d):
    if b.is_zero() or d.is_zero():
        return
    lhs = RationalFunction.of(a, b)
    rhs = RationalFunction.of(c, d)
    assert (lhs == rhs) == (a * d == c * b)


@settings(max_examples=50, deadline=None)
@given(polys, polys)
def test_divmod_round_trip(a, b):
    if b.is_zero():
        return
    q, r = a.divmod_poly(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree() < b.degree()


def test_laurent_shift_and_reverse():
    p = LaurentPoly({-2: 3, 1: -1})
    assert p.shift(2) == LaurentPoly({0: 3, 3: -1})
    assert p.reverse() == LaurentPoly({2: 3, -1: -1})
    assert p.valuation() == -2 and p.degree() == 1


def test_exact_laurent_division():
    p = LaurentPoly({-1: 1, 1: -1})            # x^-1 - x
    q = p.exact_div(LaurentPoly({0: 1, 1: 1}))  # divide by 1 + x
    assert q * LaurentPoly({0: 1, 1: 1}) == p


def test_series_expansion():
    geo = RationalFunction.of(LaurentPoly.one(), 1 - x)
    assert geo.series_coeffs(5) == [Fraction(1)] * 5
    two = RationalFunction.of(LaurentPoly.const(2), 1 - x ** 2)
    assert two.series_coeffs(5) == [2, 0, 2, 0, 2]


def test_cyclotomic_coefficients():
    p = LaurentPoly({0: 1, 1: -zeta(3)})
    q = LaurentPoly({0: 1, 1: -zeta(3, 2)})
    prod = p * q
    assert prod == LaurentPoly({0: 1, 1: 1, 2: 1})   # 1 + x + x^2


def test_nested_laurent_ring():
    u_inner = LaurentPoly({1: 1}, "u")
    uv = LaurentPoly({2: u_inner, -1: LaurentPoly({0: 3}, "u")}, "v")
    sq = uv * uv
    assert sq.coeff(4) == u_inner * u_inner
    assert sq.coeff(1) == LaurentPoly({1: 6}, "u")
    assert sq.coeff(-2) == LaurentPoly({0: 9}, "u")
    assert str(uv) == "u*v^2 + 3*v^-1"


def test_monomial_negative_powers():
    m = LaurentPoly({3: 2})
    inv = m ** -1
    assert m * inv == LaurentPoly.one()
    with pytest.raises(ValueError):
        (x + 1) ** -1


def test_substitute_var():
    p = LaurentPoly({2: 1, 0: -1}, "u")
    s4 = LaurentPoly({4: 1}, "s")
    assert p.substitute_var(s4) == LaurentPoly({8: 1, 0: -1}, "s")
