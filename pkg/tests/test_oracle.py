"""High-precision quadrature oracle: known integrals, honesty, robustness."""

import math
from fractions import Fraction as F

import mpmath as mp
import pytest

from sincasym import oracle
from sincasym.kernels import BACKEND, pykernels
from sincasym.oracle import (
    QuadratureError,
    bessel_sigma,
    first_bessel_zero,
    integrate_In,
    integrate_In_mp,
    integrate_Khat,
    integrate_Kn,
    integrate_ball,
    sigma_zeros,
    sinc_power_interval,
    sinc_power_tail,
)

PI = math.pi


class TestSincPower:
    def test_known_closed_forms(self):
        # integral of (sin x / x)^n over [0, inf): pi/2, 3 pi/8, pi/3
        for n, exact in ((2, PI / 2), (3, 3 * PI / 8), (4, PI / 3)):
            r = integrate_In(n, 1e-13)
            assert abs(r.value / exact - 1.0) < 1e-13
            assert r.abs_err_est + r.tail_cert < 1e-13 * abs(r.value)

    def test_large_n_against_mp(self):
        for n in (50, 200):
            ref = float(integrate_In_mp(n, dps=30))
            r = integrate_In(n, 1e-13)
            assert abs(r.value / ref - 1.0) < 1e-13

    def test_rejects_divergent_and_noninteger(self):
        with pytest.raises(ValueError):
            integrate_In(1)
        with pytest.raises(ValueError):
            integrate_In(2.5)

    def test_use_abs_noninteger(self):
        # |sin x / x|^3.5 lies strictly between the |.|^4 and |.|^3 values
        r = integrate_In(3.5, 1e-7, use_abs=True)
        lo = integrate_In(4, 1e-10).value
        hi = integrate_In(3, 1e-6, use_abs=True).value
        assert lo < r.value < hi

    def test_use_abs_even_n_matches_plain(self):
        a = integrate_In(4, 1e-13).value
        b = integrate_In(4, 1e-13, use_abs=True).value
        assert abs(a / b - 1.0) < 1e-14

    def test_tol_floor(self):
        with pytest.raises(ValueError):
            integrate_In(2, 1e-15)

    def test_panel_additivity(self):
        whole = sinc_power_interval(10, 0.0, 2 * PI, 1e-13).value
        parts = (sinc_power_interval(10, 0.0, PI, 1e-13).value
                 + sinc_power_interval(10, PI, 2 * PI, 1e-13).value)
        assert abs(whole - parts) <= 1e-14 * abs(whole)

    def test_head_plus_tail_is_whole(self):
        for n in (6, 30):
            whole = integrate_In(n, 1e-13).value
            head = sinc_power_interval(n, 0.0, PI, 1e-13).value
            tail = sinc_power_tail(n, 1e-12, start=PI).value
            assert abs((head + tail) / whole - 1.0) < 1e-12

    def test_tolerance_honesty(self):
        # the loose-tolerance error estimate must cover the actual error
        loose = integrate_In(20, 1e-9)
        tight = integrate_In(20, 1e-13)
        actual = abs(loose.value - tight.value)
        assert actual <= loose.abs_err_est + loose.tail_cert + 1e-15 * abs(
            tight.value)

    def test_node_count_robustness(self, monkeypatch):
        # halving the panel order must stay within the reported error budget
        r32 = integrate_In(12, 1e-12)
        monkeypatch.setattr(oracle, "GAUSS_ORDER", 16)
        r16 = integrate_In(12, 1e-12)
        budget = r32.abs_err_est + r32.tail_cert + r16.abs_err_est + r16.tail_cert
        assert abs(r32.value - r16.value) <= budget

    def test_mp_reference_guardrails(self):
        with pytest.raises(ValueError):
            integrate_In_mp(10)


class TestDampedFamilies:
    def test_kn_reference_cells(self):
        assert round(integrate_Kn(100, 1.0, 1e-10).value, 8) == 0.02707847
        assert round(integrate_Kn(4000, 2.0, 1e-10).value, 8) == 0.00016520

    def test_kn_monotone_in_a_and_n(self):
        ks = [integrate_Kn(200, a, 1e-10).value for a in (0.5, 1.0, 1.5, 2.0)]
        assert all(x > y for x, y in zip(ks, ks[1:]))
        ks = [integrate_Kn(n, 1.0, 1e-10).value for n in (100, 200, 500)]
        assert all(x > y for x, y in zip(ks, ks[1:]))

    def test_khat_monotone_and_scaling(self):
        ks = [integrate_Khat(500, a, 1e-10).value for a in (0.5, 1.0, 2.0)]
        assert all(x > y for x, y in zip(ks, ks[1:]))
        # leading order scales like n^(-1/2)
        r = integrate_Khat(4000, 1.0, 1e-10).value \
            / integrate_Khat(1000, 1.0, 1e-10).value
        assert abs(r - 0.5) < 5e-4

    def test_khat_lower_limit_window(self):
        with pytest.raises(ValueError):
            integrate_Khat(100, 1.0, start=0.5 * PI)
        with pytest.raises(ValueError):
            integrate_Khat(100, 1.0, start=0.0)

    def test_domain_validation(self):
        with pytest.raises(ValueError):
            integrate_Kn(100, -1.0)
        with pytest.raises(ValueError):
            integrate_Khat(0, 1.0)


class TestBesselSigma:
    def test_half_index_is_sinc(self):
        for x in (0.5, 1.0, 2.0, 5.0, 10.0):
            assert abs(bessel_sigma(0.5, x) - math.sin(x) / x) < 1e-15

    def test_normalization_and_parity(self):
        assert bessel_sigma(1.5, 0.0) == 1.0
        for nu in (0.7, 2.0):
            assert bessel_sigma(nu, 1.3) == bessel_sigma(nu, -1.3)

    def test_against_mpmath(self):
        with mp.workdps(30):
            for nu in (0.0, 1.0, F(4, 3)):
                for x in (1.0, 4.0, 15.0):
                    nuf = float(nu)
                    ref = float(mp.gamma(1 + mp.mpf(nuf)) * mp.besselj(nuf, x)
                                / (mp.mpf(x) / 2) ** nuf)
                    assert abs(bessel_sigma(nu, x) - ref) < 1e-13 * max(
                        1.0, abs(ref))

    def test_evaluation_cap(self):
        with pytest.raises(ValueError):
            bessel_sigma(1.0, 61.0)

    def test_first_zeros(self):
        assert abs(first_bessel_zero(0.5) - PI) < 1e-13
        assert abs(first_bessel_zero(0.0) - 2.404825557695773) < 1e-13
        assert abs(first_bessel_zero(1.0) - 3.831705970207512) < 1e-12
        for nu in (0.5, 2.0, 7.0):
            assert first_bessel_zero(nu) > nu

    def test_zero_list_interlaces(self):
        zs = sigma_zeros(0.5, 5)
        for k, z in enumerate(zs, start=1):
            assert abs(z - k * PI) < 1e-12


class TestBallIntegral:
    def test_half_index_reduces_to_sinc(self):
        # nu = 1/2, a = 1: sigma = sin x / x and the weight x^(a-1) drops
        r = integrate_ball(F(1, 2), 1, 20, 1e-12)
        ref = integrate_In(20, 1e-13, use_abs=True)
        assert abs(r.value / ref.value - 1.0) < 1e-12

    def test_singular_endpoint_exponent(self):
        # a = 2/3 puts an x^(-1/3) factor at the origin; the power
        # substitution must still deliver the requested tolerance
        r = integrate_ball(F(4, 3), F(2, 3), 100, 1e-13)
        assert r.abs_err_est + r.tail_cert < 1e-13 * abs(r.value)

    def test_against_mpmath(self):
        nu, a, n = F(4, 3), F(8, 3), 40
        with mp.workdps(30):
            nuf = mp.mpf(4) / 3
            f = lambda x: (mp.gamma(1 + nuf) * mp.besselj(nuf, x)
                           / (x / 2) ** nuf) ** n * x ** (mp.mpf(8) / 3 - 1)
            ref = float(mp.quad(f, mp.linspace(0, 12, 13)))
        r = integrate_ball(nu, a, n, 1e-12)
        assert abs(r.value / ref - 1.0) < 1e-12

    def test_domain_validation(self):
        with pytest.raises(ValueError):
            integrate_ball(F(1, 2), 1, 1)   # n (nu + 1/2) <= a
        with pytest.raises(ValueError):
            integrate_ball(0, 1, 10)

    def test_unachievable_tolerance_raises_with_best(self):
        # the x^-1.5 tail of |sinc|^2.5 cannot reach 1e-12 by panelling
        with pytest.raises(QuadratureError) as ei:
            integrate_In(2.5, 1e-12, use_abs=True)
        best = ei.value.best
        assert best.value > 0
        assert best.tail_cert > 0
        assert best.abs_err_est + best.tail_cert >= 1e-12 * best.value


@pytest.mark.skipif(BACKEND != "compiled", reason="compiled kernels absent")
class TestBackendParity:
    def test_bitwise_panel_agreement(self):
        import numpy as np

        from sincasym.kernels import _ckernels

        xs, ws = map(tuple, np.polynomial.legendre.leggauss(32))
        cases = [
            ("panel_sinc_pow", (100.0, 0.0, PI, xs, ws, False)),
            ("panel_sinc_pow", (2.5, 0.0, PI, xs, ws, True)),
            ("panel_kn", (100.0, 1.0, 0.0, PI, xs, ws)),
            ("panel_khat", (100.0, 1.0, 1.0, PI, xs, ws)),
            ("panel_ball", (4.0 / 3.0, 0.0, 100.0, 8.0 / 3.0, 0.0, 4.0, xs, ws)),
            ("panel_ball_pow", (4.0 / 3.0, 0.0, 100.0, 2, 3, 0.0, 1.6, xs, ws)),
        ]
        for name, args in cases:
            py = getattr(pykernels, name)(*args)
            cc = getattr(_ckernels, name)(*args)
            assert py == cc, name

    def test_sigma_dd_agreement(self):
        from sincasym.kernels import _ckernels

        for x in (0.3, 2.0, 11.5, 40.0):
            assert pykernels.sigma_dd(1.5, 0.0, x) == _ckernels.sigma_dd(
                1.5, 0.0, x)
