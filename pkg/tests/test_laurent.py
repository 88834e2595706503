"""Exact Laurent arithmetic, unit normalization, gcd, text form."""

import pytest
from hypothesis import given, strategies as st

from knotgroups.errors import (
    CoefficientOverflowError,
    InvalidParameterError,
    ZeroPolynomialError,
)
from knotgroups.laurent import (
    LaurentPoly,
    format_laurent,
    gcd,
    parse_laurent,
)


def lp(coeffs):
    return LaurentPoly(coeffs)


class TestArithmetic:
    def test_t_inverse_times_t(self):
        assert lp({-1: 1}) * lp({1: 1}) == LaurentPoly.one()

    def test_difference_of_squares(self):
        one_minus_t = lp({0: 1, 1: -1})
        one_plus_t = lp({0: 1, 1: 1})
        assert one_minus_t * one_plus_t == lp({0: 1, 2: -1})

    def test_alternating_sum_minus_leading_term(self):
        # (t^-2 - t^-1 + 1) + (-t^-2) = -t^-1 + 1, term by term
        alternating = lp({k - 2: (-1) ** k for k in range(3)})
        assert alternating + lp({-2: -1}) == lp({-1: -1, 0: 1})

    def test_int_coercion(self):
        p = lp({1: 1})
        assert p - 1 == lp({0: -1, 1: 1})
        assert 1 - p == lp({0: 1, 1: -1})
        assert 3 * p == lp({1: 3})

    def test_zero_behaviour(self):
        zero = LaurentPoly.zero()
        assert zero.is_zero
        assert zero + zero == zero
        assert zero * lp({5: 7}) == zero

    def test_overflow_raises(self):
        big = lp({0: 2**62})
        with pytest.raises(CoefficientOverflowError):
            big * big
        with pytest.raises(CoefficientOverflowError):
            lp({0: 2**63})


class TestNormalize:
    def test_alternating_normalizes_to_ascending(self):
        p = lp({-2: 1, -1: -1, 0: 1})  # t^-2 - t^-1 + 1
        assert p.normalize_up_to_units() == lp({0: 1, 1: -1, 2: 1})

    def test_unit_times_unit(self):
        assert lp({5: -1}).normalize_up_to_units() == LaurentPoly.one()

    def test_zero(self):
        assert LaurentPoly.zero().normalize_up_to_units() == LaurentPoly.zero()

    def test_idempotent_and_associate_invariant(self):
        p = lp({-3: 2, 0: -5, 2: 1})
        n = p.normalize_up_to_units()
        assert n.normalize_up_to_units() == n
        assert (-p.shift(4)).normalize_up_to_units() == n
        assert p.is_associate(-p.shift(-7))


class TestBreadth:
    def test_constant(self):
        assert lp({0: 7}).breadth() == 0

    def test_spread(self):
        assert lp({-3: 1, 4: 1}).breadth() == 7

    def test_family_formula_breadth(self):
        for m in range(1, 6):
            formula = lp({k - 2: (-1) ** k for k in range(2 * m + 1)})
            assert formula.breadth() == 2 * m

    def test_zero_raises(self):
        with pytest.raises(ZeroPolynomialError):
            LaurentPoly.zero().breadth()


class TestGcd:
    def test_gcd_with_zero(self):
        p = lp({0: 1, 1: -1, 2: 1})
        assert gcd(p, LaurentPoly.zero()) == p
        assert gcd(LaurentPoly.zero(), p) == p

    def test_content_and_primitive_parts(self):
        # gcd(2 - 2t, 3 - 3t) = 1 - t; verified by multiplying back
        g = gcd(lp({0: 2, 1: -2}), lp({0: 3, 1: -3}))
        assert g == lp({0: 1, 1: -1})
        assert g * lp({0: 2}) == lp({0: 2, 1: -2})
        assert g * lp({0: 3}) == lp({0: 3, 1: -3})

    def test_associates(self):
        p = lp({0: 1, 1: -1, 2: 1})
        q = (-p).shift(-3)
        assert gcd(p, q) == p

    def test_coprime(self):
        assert gcd(lp({0: 1, 1: 1}), lp({0: 1, 1: -1})) == LaurentPoly.one()

    def test_common_factor_recovered(self):
        common = lp({0: 1, 1: -1, 2: 1})
        p = common * lp({0: 1, 1: 1})
        q = common * lp({0: 2, 3: 1})
        assert gcd(p, q) == common


class TestDivision:
    def test_exact(self):
        p = lp({0: 1, 1: -1, 2: 1}) * lp({-2: 3, 1: 1})
        q = p.exact_divide(lp({0: 1, 1: -1, 2: 1}))
        assert q == lp({-2: 3, 1: 1})

    def test_inexact(self):
        assert lp({0: 1, 1: 1}).exact_divide(lp({0: 2})) is None
        assert lp({2: 1}).exact_divide(lp({0: 1, 1: 1})) is None

    def test_zero_cases(self):
        assert LaurentPoly.zero().exact_divide(lp({0: 3})) == LaurentPoly.zero()
        assert lp({0: 3}).exact_divide(LaurentPoly.zero()) is None


class TestTextForm:
    @pytest.mark.parametrize(
        "coeffs, text",
        [
            ({}, "0"),
            ({0: 1, 1: -1, 2: 1}, "1 - t + t^2"),
            ({-2: 1, -1: -1, 0: 1}, "t^-2 - t^-1 + 1"),
            ({0: 7}, "7"),
            ({5: -1}, "-t^5"),
            ({1: 1}, "t"),
            ({-1: -2, 0: 1}, "-2*t^-1 + 1"),
            ({3: 2, 5: 7}, "2*t^3 + 7*t^5"),
        ],
    )
    def test_round_trip(self, coeffs, text):
        p = lp(coeffs)
        assert format_laurent(p) == text
        assert parse_laurent(text) == p

    def test_parse_rejects_garbage(self):
        for bad in ("", "t^", "1 +", "q + 1", "t**2"):
            with pytest.raises(InvalidParameterError):
                parse_laurent(bad)


# -- property tests -------------------------------------------------------------

small_polys = st.dictionaries(
    st.integers(min_value=-4, max_value=4),
    st.integers(min_value=-5, max_value=5),
    max_size=5,
).map(LaurentPoly)


@given(small_polys, small_polys, small_polys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r


@given(small_polys, small_polys)
def test_gcd_divides_both(p, q):
    g = gcd(p, q)
    if g.is_zero:
        assert p.is_zero and q.is_zero
    else:
        assert g.divides(p)
        assert g.divides(q)


@given(small_polys, small_polys, small_polys)
def test_gcd_associative_up_to_units(p, q, r):
    left = gcd(gcd(p, q), r)
    right = gcd(p, gcd(q, r))
    assert left == right  # both sides already normalized


@given(small_polys, st.integers(min_value=-4, max_value=4), st.booleans())
def test_normalize_constant_on_associates(p, k, flip):
    assoc = p.shift(k)
    if flip:
        assoc = -assoc
    assert assoc.normalize_up_to_units() == p.normalize_up_to_units()


@given(small_polys)
def test_text_round_trip(p):
    assert parse_laurent(format_laurent(p)) == p
