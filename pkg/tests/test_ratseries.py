"""Exact power-series arithmetic: ring laws, inverses, reversion."""

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sincasym.ratseries import (
    DegenerateDivisor,
    NotInvertible,
    PowerSeries,
    constant_series,
    format_rational,
    identity_series,
    parse_rational,
    pochhammer,
    series_compose,
    series_div,
    series_log,
    series_mul,
    series_pow,
    series_revert,
    series_sqrt,
)


def rand_series(rng, order, unit=False, monic=False):
    cs = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(order + 1)]
    if unit:
        cs[0] = F(1)
    if monic:
        cs[0] = F(0)
        cs[1] = F(1)
    return PowerSeries(cs)


class TestRationals:
    def test_parse_format_round_trip(self):
        for text in ("3/4", "-17/5", "0", "12", "-1"):
            assert format_rational(parse_rational(text)) == text

    def test_parse_whitespace_and_canonical(self):
        assert parse_rational(" 6/8 ") == F(3, 4)
        assert format_rational(F(6, 8)) == "3/4"
        assert format_rational(F(-4, 2)) == "-2"

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_rational("three")
        with pytest.raises(ZeroDivisionError):
            parse_rational("1/0")

    def test_pochhammer(self):
        assert pochhammer(F(1, 2), 0) == 1
        assert pochhammer(F(1, 2), 3) == F(1, 2) * F(3, 2) * F(5, 2)
        assert pochhammer(3, 4) == 3 * 4 * 5 * 6
        with pytest.raises(ValueError):
            pochhammer(1, -1)


class TestPowerSeriesBasics:
    def test_immutable(self):
        f = PowerSeries([1, 2])
        with pytest.raises(AttributeError):
            f.coeffs = ()

    def test_parity_inferred(self):
        assert PowerSeries([1, 0, 2]).parity == "even"
        assert PowerSeries([0, 1, 0, 5]).parity == "odd"
        assert PowerSeries([1, 1]).parity == "none"

    def test_parity_declaration_checked(self):
        with pytest.raises(ValueError):
            PowerSeries([1, 1], parity="even")
        with pytest.raises(ValueError):
            PowerSeries([1, 0], parity="odd")

    def test_truncate_cannot_extend(self):
        f = PowerSeries([1, 2, 3])
        assert f.truncate(1) == PowerSeries([1, 2])
        with pytest.raises(ValueError):
            f.truncate(5)

    def test_valuation(self):
        assert PowerSeries([0, 0, 3]).valuation() == 2
        assert PowerSeries([0, 0]).valuation() is None

    def test_derivative_integral_round_trip(self):
        f = PowerSeries([0, 2, 3, F(1, 4)])
        assert f.derivative().integral() == f

    def test_binary_order_is_minimum(self):
        f = PowerSeries([1, 1, 1, 1])
        g = PowerSeries([1, 1])
        assert (f + g).order == 1
        assert series_mul(f, g).order == 1


class TestRingLaws:
    def test_randomized_laws(self):
        rng = random.Random(1234)
        for _ in range(300):
            n = rng.randint(2, 7)
            f = rand_series(rng, n)
            g = rand_series(rng, n)
            h = rand_series(rng, n)
            assert series_mul(f, g) == series_mul(g, f)
            assert series_mul(series_mul(f, g), h) == series_mul(f, series_mul(g, h))
            assert series_mul(f, g + h) == series_mul(f, g) + series_mul(f, h)

    @settings(max_examples=120, deadline=None)
    @given(st.lists(st.fractions(min_value=-5, max_value=5), min_size=3,
                    max_size=7),
           st.lists(st.fractions(min_value=-5, max_value=5), min_size=3,
                    max_size=7))
    def test_mul_commutes(self, a, b):
        f, g = PowerSeries(a), PowerSeries(b)
        assert series_mul(f, g) == series_mul(g, f)


class TestDivision:
    def test_round_trip(self):
        rng = random.Random(99)
        for _ in range(200):
            n = rng.randint(2, 7)
            f = rand_series(rng, n)
            g = rand_series(rng, n, unit=True)
            assert series_div(series_mul(f, g), g) == f

    def test_common_leading_degree_cancels(self):
        # x^2 (1 + x) / x^2 (1 - x)
        f = PowerSeries([0, 0, 1, 1, 0])
        g = PowerSeries([0, 0, 1, -1, 0])
        q = series_div(f, g)
        assert q.coeffs == (F(1), F(2), F(2))

    def test_zero_divisor_raises(self):
        with pytest.raises(DegenerateDivisor):
            series_div(PowerSeries([1, 1]), PowerSeries([0, 0]))

    def test_valuation_mismatch_raises(self):
        with pytest.raises(DegenerateDivisor):
            series_div(PowerSeries([1, 1, 1]), PowerSeries([0, 1, 1]))


class TestLogSqrtPow:
    def test_log_one_plus_x(self):
        f = PowerSeries([1, 1, 0, 0, 0])
        assert series_log(f).coeffs == (F(0), F(1), F(-1, 2), F(1, 3), F(-1, 4))

    def test_log_of_product(self):
        rng = random.Random(5)
        for _ in range(50):
            n = rng.randint(3, 7)
            f = rand_series(rng, n, unit=True)
            g = rand_series(rng, n, unit=True)
            assert series_log(series_mul(f, g)) == series_log(f) + series_log(g)

    def test_log_needs_unit_constant(self):
        with pytest.raises(ValueError):
            series_log(PowerSeries([2, 1]))

    def test_sqrt_squares_back(self):
        rng = random.Random(6)
        for _ in range(50):
            f = rand_series(rng, rng.randint(2, 8), unit=True)
            s = series_sqrt(f)
            assert series_mul(s, s) == f

    def test_pow_integer_matches_repeated_mul(self):
        rng = random.Random(7)
        for _ in range(50):
            f = rand_series(rng, rng.randint(2, 7), unit=True)
            assert series_pow(f, 3) == series_mul(f, series_mul(f, f))

    def test_pow_half_matches_sqrt(self):
        rng = random.Random(8)
        for _ in range(50):
            f = rand_series(rng, rng.randint(2, 7), unit=True)
            assert series_pow(f, F(1, 2)) == series_sqrt(f)

    def test_pow_minus_one_matches_division(self):
        rng = random.Random(9)
        one = constant_series(1, 6)
        for _ in range(50):
            f = rand_series(rng, 6, unit=True)
            assert series_pow(f, -1) == series_div(one, f)

    def test_pow_exponent_addition(self):
        rng = random.Random(10)
        a, b = F(2, 3), F(-1, 2)
        for _ in range(30):
            f = rand_series(rng, 6, unit=True)
            lhs = series_mul(series_pow(f, a), series_pow(f, b))
            assert lhs == series_pow(f, a + b)


class TestComposeRevert:
    def test_compose_identity(self):
        rng = random.Random(11)
        for _ in range(30):
            f = rand_series(rng, 5)
            x = identity_series(5)
            assert series_compose(f, x) == f

    def test_compose_needs_zero_constant(self):
        with pytest.raises(ValueError):
            series_compose(PowerSeries([1, 1]), PowerSeries([1, 1]))

    def test_revert_round_trip(self):
        rng = random.Random(12)
        for _ in range(60):
            n = rng.randint(2, 8)
            f = rand_series(rng, n, monic=True)
            g = series_revert(f)
            assert series_compose(f, g) == identity_series(n)
            assert series_compose(g, f) == identity_series(n)

    def test_revert_against_lagrange_inversion(self):
        # independent formula: g_m = (1/m) [x^(m-1)] (x / f(x))^m
        rng = random.Random(13)
        for _ in range(40):
            n = rng.randint(2, 7)
            f = rand_series(rng, n, monic=True)
            g = series_revert(f)
            base = series_div(identity_series(n), f)  # x/f, unit constant
            for m in range(1, n + 1):
                pw = series_pow(base * (1 / base.coeffs[0]), m)
                coeff = (base.coeffs[0] ** m) * pw.coeffs[m - 1] / m
                assert g.coeffs[m] == coeff

    def test_revert_known_series(self):
        # inverse of x/(1-x) is x/(1+x)
        f = PowerSeries([0, 1, 1, 1, 1, 1])
        g = series_revert(f)
        assert g.coeffs == (F(0), F(1), F(-1), F(1), F(-1), F(1))

    def test_revert_requires_invertible(self):
        with pytest.raises(NotInvertible):
            series_revert(PowerSeries([1, 1]))
        with pytest.raises(NotInvertible):
            series_revert(PowerSeries([0, 0, 1]))
