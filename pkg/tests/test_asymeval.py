"""Asymptotic evaluators: closed forms, reductions, tail factors."""

import math
from fractions import Fraction as F

import mpmath as mp
import pytest

from sincasym import asymeval, oracle
from sincasym.asymeval import (
    ValidityWarning,
    eval_In,
    eval_Jn,
    eval_Khat,
    eval_Kn,
    eval_ball,
    eval_ball_general,
    kn_T1,
    optimal_truncation,
    peak_c2,
    peak_contribution,
    psi_peak_derivs,
    saddle_c2_generic,
    sigma_closed,
    sigma_direct,
    tail_bound,
    xi,
)
from sincasym.coeffgen import coeffs_In, coeffs_ball, coeffs_ball_general

PI = math.pi


@pytest.fixture(scope="module")
def sinc_table():
    return coeffs_In(12)


class TestSincEval:
    def test_leading_order_is_prefactor(self, sinc_table):
        r = eval_In(100.0, sinc_table, k_max=0)
        assert r.value == math.sqrt(3.0 * PI / 200.0)
        assert r.k_used == 0

    def test_scaling_in_n(self, sinc_table):
        # leading behaviour: I(4n) ~ I(n)/2
        a = eval_In(400.0, sinc_table).value
        b = eval_In(100.0, sinc_table).value
        assert abs(2.0 * a / b - 1.0) < 2e-3

    def test_jn_is_twice_in_at_doubled_n(self, sinc_table):
        for n in (5.0, 50.0, 500.0):
            j = eval_Jn(n, sinc_table)
            i = eval_In(2.0 * n, sinc_table)
            assert j.value == 2.0 * i.value
            assert j.k_used == i.k_used

    def test_first_omitted_tracks_next_term(self, sinc_table):
        r = eval_In(100.0, sinc_table, k_max=3)
        expect = r.prefactor * abs(float(sinc_table.c[4])) * 100.0 ** -4
        assert math.isclose(r.first_omitted, expect, rel_tol=1e-15)

    def test_k_max_validation(self, sinc_table):
        with pytest.raises(ValueError):
            eval_In(100.0, sinc_table, k_max=13)
        with pytest.raises(ValueError):
            eval_In(-1.0, sinc_table)

    def test_against_oracle_mid_n(self, sinc_table):
        exact = oracle.integrate_In(60, 1e-13).value
        est = eval_In(60.0, sinc_table, k_max=8).value
        assert abs(est / exact - 1.0) < 1e-11


class TestOptimalTruncation:
    def test_monotone_coefficients_pick_last(self, sinc_table):
        # at large n every stored term shrinks, so the full order is used
        assert optimal_truncation(sinc_table, 1e6) == sinc_table.order

    def test_small_n_picks_early(self, sinc_table):
        # below n ~ 1 the growing coefficients dominate immediately
        assert optimal_truncation(sinc_table, 0.1) == 0

    def test_auto_matches_explicit(self, sinc_table):
        k = optimal_truncation(sinc_table, 40.0)
        assert eval_In(40.0, sinc_table).k_used == k
        assert eval_In(40.0, sinc_table, k_max=k).value == \
            eval_In(40.0, sinc_table).value


class TestDampedEstimate:
    def test_sigma_closed_vs_direct(self):
        for m in (1, 2, 3):
            a = 0.3
            while a <= 4.0:
                assert abs(sigma_closed(m, a) / sigma_direct(m, a) - 1.0) < 1e-13
                a += 0.1

    def test_sigma_large_a_single_term(self):
        # for large damping the k = 1 term dominates: sigma_m ~ e^(-pi a)
        for m in (1, 2, 3):
            assert abs(sigma_closed(m, 6.0) / math.exp(-6.0 * PI) - 1.0) < 1e-7

    def test_psi_derivs_by_numerical_differentiation(self):
        def psi(x):
            return -mp.log(1 - (mp.sin(x) / x) ** 2)

        for k in (1, 2, 3):
            got = psi_peak_derivs(k)
            with mp.workdps(40):
                for i, order in enumerate((2, 3, 4)):
                    ref = float(mp.diff(psi, k * mp.pi, order))
                    assert abs(got[i] - ref) < 1e-6 * max(1.0, abs(ref))

    def test_peak_c2_matches_generic_formula(self):
        for k in (1, 2, 5, 10):
            for a in (0.5, 1.0, 2.0):
                p2, p3, p4 = psi_peak_derivs(k)
                generic = saddle_c2_generic(p2, p3, p4, -a, a * a)
                assert abs(peak_c2(k, a) - generic) < 1e-12 * abs(generic)

    def test_peak_contribution_assembles(self):
        pe = peak_contribution(2, 100.0, 1.0)
        expect = 2 * PI * math.sqrt(PI / 100.0) * (1.0 + 0.5 * pe.c2 / 100.0) \
            * math.exp(-2 * PI)
        assert math.isclose(pe.contribution, expect, rel_tol=1e-15)

    def test_eval_kn_equals_peak_sum(self):
        # the closed hyperbolic form must agree with direct peak summation
        n, a = 500.0, 1.0
        direct = math.fsum(peak_contribution(k, n, a).contribution
                           for k in range(1, 200))
        est = eval_Kn(n, a).value
        assert abs(est / direct - 1.0) < 1e-13

    def test_eval_kn_reference_cells(self):
        assert round(eval_Kn(100.0, 1.0).value, 8) == 0.02689533
        assert round(eval_Kn(1000.0, 0.5).value, 8) == 0.05873199
        assert round(eval_Kn(4000.0, 2.0).value, 8) == 0.00016520

    def test_t1_variants_differ(self):
        assert kn_T1(1.0, "derived") != kn_T1(1.0, "printed")
        with pytest.raises(ValueError):
            kn_T1(1.0, "other")

    def test_validity_warning(self):
        import warnings

        with pytest.warns(ValidityWarning):
            eval_Kn(100.0, 0.05)
        with warnings.catch_warnings():
            warnings.simplefilter("error", ValidityWarning)
            eval_Kn(100.0, 0.5)

    def test_khat_closed_form_identity(self):
        # pi^(3/2) cosh(pi a/2)/(4 sqrt(n) sinh^2(pi a/2))
        #   = pi sqrt(pi/n) e^(-pi a/2) sum_{k>=0} (k + 1/2) e^(-k pi a)
        for a in (0.5, 1.0, 2.0):
            s = math.fsum((k + 0.5) * math.exp(-k * PI * a) for k in range(200))
            lhs = eval_Khat(400.0, a)
            rhs = PI * math.sqrt(PI / 400.0) * math.exp(-0.5 * PI * a) * s
            assert abs(lhs / rhs - 1.0) < 1e-14

    def test_khat_scaling(self):
        assert math.isclose(eval_Khat(100.0, 1.0),
                            2.0 * eval_Khat(400.0, 1.0), rel_tol=1e-15)


class TestBallEval:
    def test_half_index_reduces_to_sinc(self, sinc_table):
        # at nu = 1/2 the prefactor and coefficients collapse to the sinc form
        tab = coeffs_ball(F(1, 2), 6)
        for n in (50.0, 200.0):
            b = eval_ball(F(1, 2), n, tab, k_max=6)
            i = eval_In(n, sinc_table, k_max=6)
            assert abs(b.value / i.value - 1.0) < 1e-14

    def test_general_reduces_to_ball(self):
        nu = F(4, 3)
        tb = coeffs_ball(nu, 6)
        tg = coeffs_ball_general(nu, 2 * nu, 6)
        for n in (50.0, 400.0):
            assert math.isclose(eval_ball(nu, n, tb, k_max=5).value,
                                eval_ball_general(nu, 2 * nu, n, tg,
                                                  k_max=5).value,
                                rel_tol=1e-15)

    def test_table_mismatch_rejected(self):
        tab = coeffs_ball(F(4, 3), 4)
        with pytest.raises(ValueError):
            eval_ball(F(1, 2), 100.0, tab)
        with pytest.raises(ValueError):
            eval_ball_general(F(4, 3), F(8, 3), 100.0, tab)

    def test_convergence_condition(self):
        nu, a = F(1, 4), F(9)
        tab = coeffs_ball_general(nu, a, 3)
        with pytest.raises(ValueError):
            eval_ball_general(nu, a, 2.0, tab)

    def test_against_oracle(self):
        nu = F(4, 3)
        tab = coeffs_ball(nu, 6)
        exact = oracle.integrate_ball(nu, 2 * nu, 100, 1e-12).value
        est = eval_ball(nu, 100.0, tab, k_max=5).value
        assert abs(est / exact - 1.0) < 1e-11


class TestTailFactors:
    def test_xi_half(self):
        assert abs(xi(F(1, 2)) - 2.0 ** -0.5) < 1e-14

    def test_xi_monotone_decreasing(self):
        vals = [xi(0.5 + 0.1 * i) for i in range(76)]
        assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_xi_below_stirling_envelope(self):
        for nu in (0.5, 1.0, 2.0, 5.0, 8.0):
            env = (2.0 / math.e) ** nu * math.sqrt(2.0 * PI * nu)
            assert 0.0 < xi(nu) < env

    def test_sinc_tail_bound_values(self):
        assert math.isclose(tail_bound("sinc", 2.0), 1.0 / PI, rel_tol=1e-15)
        assert math.isclose(tail_bound("sinc", 20.0), PI ** -19 / 19.0,
                            rel_tol=1e-15)

    def test_tail_bound_validation(self):
        with pytest.raises(ValueError):
            tail_bound("sinc", 1.0)
        with pytest.raises(ValueError):
            tail_bound("ball", 10.0)
        with pytest.raises(ValueError):
            tail_bound("ball", 2.0, nu=F(1, 2))
        with pytest.raises(ValueError):
            tail_bound("bessel", 10.0)

    def test_ball_tail_bound_halving(self):
        # the bound decays like xi^n, with the 1/(n-2) factor on top
        nu = F(4, 3)
        r = tail_bound("ball", 40.0, nu) / tail_bound("ball", 20.0, nu)
        expect = xi(nu) ** 20 * 18.0 / 38.0
        assert abs(r / expect - 1.0) < 1e-12

    def test_tail_bound_dominates_truncation_error(self, sinc_table):
        # sanity: the analytic tail bound exceeds the actual omitted tail
        for n in (4, 8, 16):
            full = oracle.integrate_In(n, 1e-13).value
            head = oracle.sinc_power_interval(n, 0.0, PI, 1e-13).value
            assert abs(full - head) <= tail_bound("sinc", float(n)) * 1.0000001
