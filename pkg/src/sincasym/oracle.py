"""High-precision quadrature oracle for the four integral families.

Independent of the asymptotic machinery: panels are aligned to the
integrand's natural breakpoints (zeros of sin x / peaks at multiples of
pi, zeros of the Bessel ratio sigma), each panel uses fixed-order
Gauss-Legendre nodes with adaptive bisection, and sums are accumulated in
double-double arithmetic (see :mod:`sincasym.kernels`).  Truncation of the
infinite range is certified by an analytic majorant per family.

When a power-decay majorant would need an impractical truncation point
(small n), the remaining tail is summed per period and accelerated with
mpmath's series extrapolation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional

import numpy as np

from . import kernels

PI = math.pi

DEFAULT_TOL = 1e-12
MIN_TOL = 1e-14
GAUSS_ORDER = 32
MAX_DEPTH = 40
MAX_DIRECT_PANELS = 300
SIGMA_X_CAP = 60.0

# double-precision nodes/weights bound the achievable relative error
FLOOR_REL = 2e-15

_gauss_cache: dict = {}


def _gauss(order: int):
    try:
        return _gauss_cache[order]
    except KeyError:
        xs, ws = np.polynomial.legendre.leggauss(order)
        # plain Python floats: the kernels rely on float inf/nan semantics
        # without numpy scalar warnings, and run faster on the fallback
        pair = (tuple(float(x) for x in xs), tuple(float(w) for w in ws))
        _gauss_cache[order] = pair
        return pair


class QuadratureError(RuntimeError):
    """Requested tolerance unachievable; carries the best result obtained."""

    def __init__(self, message: str, best: "QuadResult"):
        super().__init__(message)
        self.best = best


@dataclass(frozen=True)
class QuadResult:
    value: float
    abs_err_est: float
    panels: int
    tail_cert: float

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "abs_err_est": self.abs_err_est,
            "panels": self.panels,
            "tail_cert": self.tail_cert,
        }


def _split_float(q: Fraction):
    """Exact rational -> double-double pair (hi correctly rounded)."""
    hi = float(q)
    lo = float(q - Fraction(hi))
    return hi, lo


class _Accumulator:
    """Deterministic sum of double-double panel contributions."""

    def __init__(self):
        self.parts: list = []
        self.err = 0.0
        self.panels = 0

    def add(self, hi: float, lo: float, err: float):
        self.parts.append(hi)
        self.parts.append(lo)
        self.err += err
        self.panels += 1

    @property
    def value(self) -> float:
        return math.fsum(self.parts)


def _adaptive(panel_fn, lo: float, hi: float, tol_abs: float,
              acc: _Accumulator, depth: int = 0):
    """Bisect until whole-vs-halves agreement; error estimate is the defect."""
    wh, wl = panel_fn(lo, hi)
    mid = 0.5 * (lo + hi)
    lh, ll = panel_fn(lo, mid)
    rh, rl = panel_fn(mid, hi)
    diff = abs(math.fsum((wh, wl, -lh, -ll, -rh, -rl)))
    if not math.isfinite(diff):
        # non-finite integrand values: bisection cannot help
        acc.add(lh, ll, math.inf)
        acc.add(rh, rl, 0.0)
        return
    if diff <= tol_abs or depth >= MAX_DEPTH:
        acc.add(lh, ll, 0.0)
        acc.add(rh, rl, diff)
        return
    _adaptive(panel_fn, lo, mid, 0.5 * tol_abs, acc, depth + 1)
    _adaptive(panel_fn, mid, hi, 0.5 * tol_abs, acc, depth + 1)


def _check_tol(tol: float) -> float:
    if tol < MIN_TOL:
        raise ValueError(f"tolerance {tol} below supported minimum {MIN_TOL}")
    return tol


def _run(panel_fn: Callable, intervals: Iterator, majorant: Callable,
         tol: float, max_intervals: int = 100_000) -> QuadResult:
    """Integrate successive intervals until the tail majorant is negligible."""
    acc = _Accumulator()
    scale = None
    hi_end = 0.0
    done = False
    for count, (lo, hi) in enumerate(intervals):
        if scale is None:
            wh, wl = panel_fn(lo, hi)
            scale = abs(wh) + 1e-300
        _adaptive(panel_fn, lo, hi, 0.25 * tol * scale, acc)
        scale = max(scale, abs(acc.value))
        hi_end = hi
        m = majorant(hi)
        if m is not None and m < 0.5 * tol * (abs(acc.value) + 1e-300):
            done = True
            break
        if count + 1 >= max_intervals:
            break
    value = acc.value
    tail = majorant(hi_end)
    tail_cert = tail if tail is not None else math.inf
    abs_err = acc.err + FLOOR_REL * abs(value)
    result = QuadResult(value=value, abs_err_est=abs_err,
                        panels=acc.panels, tail_cert=tail_cert)
    if not done or abs_err + tail_cert >= tol * (abs(value) + 1e-300):
        raise QuadratureError("requested tolerance not achieved", result)
    return result


# -- sinc-power family -------------------------------------------------


def _sinc_panel(n: float, use_abs: bool):
    xs, ws = _gauss(GAUSS_ORDER)
    return lambda lo, hi: kernels.panel_sinc_pow(n, lo, hi, xs, ws, use_abs)


def _sinc_tail_majorant(n: float):
    # |sin x / x|^n <= x^-n, so the tail beyond X is below X^(1-n)/(n-1)
    return lambda X: X ** (1.0 - n) / (n - 1.0) if X > 0 else None


def _pi_intervals(start: float = 0.0) -> Iterator:
    k = int(math.floor(start / PI))
    lo = start
    while True:
        hi = (k + 1) * PI
        if hi > lo:
            yield (lo, hi)
        lo = hi
        k += 1


_EXPINT_N_CAP = 40
_SINC_SWITCH_PANELS = 20


def _sinc_tail_expint(n: int, X: float):
    """Exact tail integral of (sin x / x)^n over [X, inf) for integer n.

    Expands sin^n x into complex exponentials; each mode reduces to an
    incomplete-gamma tail handled by mpmath's expint at high working
    precision.  Returns (value, error_estimate).  Head-to-head with the
    closed forms I(2) = pi/2, I(3) = 3 pi/8 this is exact to ~1e-28.

    Alternating binomial cancellation costs ~0.3 n digits, hence the cap
    on n (larger n never needs this path: the x^-n majorant bites first).
    """
    import math as _math

    import mpmath as mp

    if n > _EXPINT_N_CAP:
        raise ValueError("expint tail path capped at moderate n")
    with mp.workdps(45):
        s = mp.mpf(0)
        Xm = mp.mpf(X)
        for j in range(n + 1):
            m = n - 2 * j
            c = mp.mpf(_math.comb(n, j)) * (-1) ** j
            if m == 0:
                s += c / (n - 1)
            else:
                s += c * mp.expint(n, -1j * m * Xm)
        tail = float(mp.re(s / (2j) ** n * Xm ** (1 - n)))
    return tail, 1e-20 * abs(tail) + 1e-300


def integrate_In(n: float, tol: float = DEFAULT_TOL, *,
                 use_abs: bool = False) -> QuadResult:
    """I(n) = integral of (sin x / x)^n over [0, inf).

    n > 1; integer n by default (the sign-preserving power), |.|^n behind
    the use_abs flag.  Small n, where the power-decay majorant would need
    an impractical truncation point, switches to accelerated per-period
    tail summation.
    """
    if n <= 1:
        raise ValueError("need n > 1 for convergence")
    if n != int(n) and not use_abs:
        raise ValueError("non-integer n requires use_abs=True (|sin x / x|^n)")
    _check_tol(tol)
    panel_fn = _sinc_panel(n, use_abs)
    majorant = _sinc_tail_majorant(n)
    can_expint = (n == int(n) and int(n) <= _EXPINT_N_CAP
                  and not (use_abs and int(n) % 2 == 1))

    acc = _Accumulator()
    scale = None
    k = 0
    while True:
        lo, hi = k * PI, (k + 1) * PI
        if scale is None:
            wh, _ = panel_fn(lo, hi)
            scale = abs(wh) + 1e-300
        _adaptive(panel_fn, lo, hi, 0.25 * tol * scale, acc)
        scale = max(scale, abs(acc.value))
        k += 1
        m = majorant(k * PI)
        if m < 0.5 * tol * abs(acc.value):
            value = acc.value
            result = QuadResult(value, acc.err + FLOOR_REL * abs(value),
                                acc.panels, m)
            if result.abs_err_est + m >= tol * abs(value):
                raise QuadratureError("requested tolerance not achieved", result)
            return result
        if can_expint and k >= _SINC_SWITCH_PANELS:
            tail, tail_err = _sinc_tail_expint(int(n), k * PI)
            value = acc.value + tail
            abs_err = acc.err + FLOOR_REL * abs(value)
            result = QuadResult(value, abs_err, acc.panels, tail_err)
            if abs_err + tail_err >= tol * abs(value):
                raise QuadratureError("requested tolerance not achieved", result)
            return result
        if k >= MAX_DIRECT_PANELS:
            result = QuadResult(acc.value, acc.err + FLOOR_REL * abs(acc.value),
                                acc.panels, m)
            raise QuadratureError(
                "slow tail decay: tolerance not achievable by direct panelling",
                result)


def integrate_In_mp(n: int, dps: int = 40):
    """Arbitrary-precision reference for the sinc-power integral.

    For n >= 20 the x^-n envelope makes everything beyond 2 pi smaller
    than 10^-dps, so two adaptive panels suffice.  Used where double
    precision cannot resolve the residuals being compared (deep series
    terms at large n); returns an mpf.
    """
    import mpmath as mp

    if n < 20:
        raise ValueError("need n >= 20 (tail certificate at 2 pi)")
    with mp.workdps(dps + 10):
        tail_bound = (2 * mp.pi) ** (1 - n) / (n - 1)
        if tail_bound > mp.mpf(10) ** (-dps):
            raise ValueError(f"tail bound {tail_bound} exceeds 10^-{dps}")
        f = lambda x: (mp.sinc(x)) ** n
        width = 3 / mp.sqrt(n)
        val = +mp.quad(f, [0, width, mp.pi, 2 * mp.pi])
    return val


def sinc_power_interval(n: float, lo: float, hi: float,
                        tol: float = DEFAULT_TOL, *,
                        use_abs: bool = False) -> QuadResult:
    """(sin x / x)^n integrated over a finite interval [lo, hi]."""
    _check_tol(tol)
    panel_fn = _sinc_panel(n, use_abs)
    acc = _Accumulator()
    wh, _ = panel_fn(lo, hi)
    _adaptive(panel_fn, lo, hi, 0.25 * tol * (abs(wh) + 1e-300), acc)
    value = acc.value
    return QuadResult(value, acc.err + FLOOR_REL * abs(value), acc.panels, 0.0)


def sinc_power_tail(n: float, tol: float = DEFAULT_TOL, *,
                    start: float = PI, use_abs: bool = False) -> QuadResult:
    """Tail integral of (sin x / x)^n over [start, inf); n > 1."""
    if n <= 1:
        raise ValueError("need n > 1")
    _check_tol(tol)
    if (n == int(n) and int(n) <= _EXPINT_N_CAP
            and not (use_abs and int(n) % 2 == 1)):
        tail, tail_err = _sinc_tail_expint(int(n), start)
        return QuadResult(tail, tail_err, 0, tail_err)
    return _run(_sinc_panel(n, use_abs), _pi_intervals(start),
                _sinc_tail_majorant(n), tol)


# -- exponentially damped families ------------------------------------


def integrate_Kn(n: float, a: float, tol: float = DEFAULT_TOL) -> QuadResult:
    """K(n, a) = integral of exp(-a x) (1 - sin^2 x / x^2)^n over [0, inf)."""
    if n <= 0 or a <= 0:
        raise ValueError("need n > 0 and a > 0")
    _check_tol(tol)
    xs, ws = _gauss(GAUSS_ORDER)
    panel_fn = lambda lo, hi: kernels.panel_kn(n, a, lo, hi, xs, ws)
    majorant = lambda X: math.exp(-a * X) / a
    return _run(panel_fn, _pi_intervals(0.0), majorant, tol)


def integrate_Khat(n: float, a: float, tol: float = DEFAULT_TOL, *,
                   start: float = 1.0) -> QuadResult:
    """Khat(n, a) = integral of exp(-a x) (1 - cos^2 x / x^2)^n over [1, inf).

    Panels are aligned to [k pi, (k+1) pi] so each contains one peak at
    (k + 1/2) pi; the first panel starts at the lower limit (1 by
    definition; other values in (0, pi/2) are accepted so the verification
    suite can probe sensitivity to the choice).
    """
    if n <= 0 or a <= 0:
        raise ValueError("need n > 0 and a > 0")
    if not 0.0 < start < 0.5 * PI:
        raise ValueError("lower limit must lie in (0, pi/2)")
    _check_tol(tol)
    xs, ws = _gauss(GAUSS_ORDER)
    panel_fn = lambda lo, hi: kernels.panel_khat(n, a, lo, hi, xs, ws)
    majorant = lambda X: math.exp(-a * X) / a
    return _run(panel_fn, _pi_intervals(start), majorant, tol)


# -- Bessel-ratio family ----------------------------------------------


def bessel_sigma(nu: float, x: float) -> float:
    """sigma(x) = Gamma(1+nu) J_nu(x) / (x/2)^nu via its power series.

    Double-double accumulation; |x| capped at 60 to keep the alternating-
    series cancellation within the error budget.
    """
    if abs(x) > SIGMA_X_CAP:
        raise ValueError(f"|x| > {SIGMA_X_CAP}: cancellation budget exceeded")
    nu_h, nu_l = _split_float(Fraction(nu))
    h, l = kernels.sigma_dd(nu_h, nu_l, x)
    return h + l


def first_bessel_zero(nu: float, rel_tol: float = 1e-14) -> float:
    """First positive zero of J_nu, located on the sigma series.

    Bracketed by marching from max(nu, 1/2) (the zero exceeds nu) and
    refined by bisection with a secant polish.
    """
    if nu < 0:
        raise ValueError("need nu >= 0")
    f = lambda x: bessel_sigma(nu, x)
    lo = max(nu, 0.5)
    flo = f(lo)
    if flo <= 0.0:
        lo, flo = 0.25, f(0.25)
        if flo <= 0.0:
            raise RuntimeError("failed to start bracketing below the first zero")
    step = 0.5
    hi = lo
    while True:
        hi = hi + step
        if hi > SIGMA_X_CAP:
            raise RuntimeError("first zero beyond the sigma evaluation cap")
        fhi = f(hi)
        if fhi < 0.0:
            break
        lo, flo = hi, fhi
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm > 0.0:
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
        if hi - lo <= rel_tol * mid:
            break
    # secant polish
    x0, x1 = lo, hi
    f0, f1 = flo, fhi
    for _ in range(4):
        if f1 == f0:
            break
        x2 = x1 - f1 * (x1 - x0) / (f1 - f0)
        if not (lo <= x2 <= hi):
            break
        x0, f0, x1, f1 = x1, f1, x2, f(x2)
    return x1


def sigma_zeros(nu: float, count: int) -> list:
    """First ``count`` positive zeros of sigma (zeros of J_nu below the cap)."""
    zeros = [first_bessel_zero(nu)]
    f = lambda x: bessel_sigma(nu, x)
    x = zeros[0]
    fx = f(x + 1e-9)
    while len(zeros) < count:
        step = 0.5
        lo = x + 1e-9
        flo = f(lo)
        hi = lo
        while True:
            hi += step
            if hi > SIGMA_X_CAP:
                raise RuntimeError("zero search exceeded the sigma cap")
            fhi = f(hi)
            if flo * fhi < 0.0:
                break
            lo, flo = hi, fhi
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            fm = f(mid)
            if flo * fm <= 0.0:
                hi, fhi = mid, fm
            else:
                lo, flo = mid, fm
            if hi - lo <= 1e-14 * mid:
                break
        x = 0.5 * (lo + hi)
        zeros.append(x)
    return zeros


def _ball_tail_majorant(nu: float, a_exp: float, n: float):
    """Upper bound on the integral of |sigma|^n x^(a-1) over [X, inf).

    Uses |J_nu(x)| < 1 beyond the first zero, and for nu >= 1/2 also
    |J_nu(x)| <= sqrt(2/(pi x)); the smaller valid bound wins.
    """
    nu = float(nu)
    a_exp = float(a_exp)
    n = float(n)
    c = 2.0 ** nu * math.gamma(1.0 + nu)

    def majorant(X: float):
        best = None
        if n * nu > a_exp and X > 0:
            b1 = (c / X ** nu) ** n * X ** a_exp / (n * nu - a_exp)
            best = b1
        if nu >= 0.5 and n * (nu + 0.5) > a_exp and X > 0:
            c2 = c * math.sqrt(2.0 / PI)
            b2 = (c2 / X ** (nu + 0.5)) ** n * X ** a_exp / (n * (nu + 0.5) - a_exp)
            best = b2 if best is None else min(best, b2)
        return best

    return majorant


def integrate_ball(nu: float, a_exp: float, n: float,
                   tol: float = DEFAULT_TOL) -> QuadResult:
    """Bessel-ratio integral of |sigma(x)|^n x^(a-1) over [0, inf).

    Panels are split at the computed zeros of sigma; the tail beyond the
    last zero is certified by the power-decay majorant.  On the first
    interval, a rational exponent a = r/s triggers the substitution
    x = u^s, which turns the algebraic x^(a-1) endpoint factor into a
    polynomial (the transformed integrand is analytic at u = 0).
    """
    if nu <= 0 or a_exp <= 0:
        raise ValueError("need nu > 0 and a > 0")
    if float(n) * (float(nu) + 0.5) <= float(a_exp):
        raise ValueError("convergence requires n (nu + 1/2) > a")
    _check_tol(tol)
    nu_h, nu_l = _split_float(Fraction(nu))
    af = float(a_exp)
    nf = float(n)
    xs, ws = _gauss(GAUSS_ORDER)
    panel_fn = lambda lo, hi: kernels.panel_ball(nu_h, nu_l, nf, af,
                                                 lo, hi, xs, ws)
    majorant = _ball_tail_majorant(float(nu), af, nf)

    frac = Fraction(a_exp) if isinstance(a_exp, (Fraction, int, str)) \
        else Fraction(a_exp).limit_denominator(64)
    use_pow = (frac.denominator <= 64
               and abs(float(frac) - af) <= 1e-13 * max(1.0, af))

    acc = _Accumulator()
    zeros = sigma_zeros(float(nu), 1)
    z1 = zeros[0]
    if use_pow:
        r, s = frac.numerator, frac.denominator
        first_fn = lambda lo, hi: kernels.panel_ball_pow(
            nu_h, nu_l, nf, r, s, lo, hi, xs, ws)
        u1 = z1 ** (1.0 / s)
    else:
        first_fn = panel_fn
        u1 = z1
    wh, _ = first_fn(0.0, u1)
    scale = abs(wh) + 1e-300
    _adaptive(first_fn, 0.0, u1, 0.25 * tol * scale, acc)
    scale = max(scale, abs(acc.value))

    prev = z1
    while True:
        m = majorant(prev)
        if m is not None and m < 0.5 * tol * (abs(acc.value) + 1e-300):
            break
        zeros += sigma_zeros_next(float(nu), zeros)
        z = zeros[-1]
        _adaptive(panel_fn, prev, z, 0.25 * tol * scale, acc)
        scale = max(scale, abs(acc.value))
        prev = z

    value = acc.value
    tail_cert = majorant(prev)
    abs_err = acc.err + FLOOR_REL * abs(value)
    result = QuadResult(value=value, abs_err_est=abs_err,
                        panels=acc.panels, tail_cert=tail_cert)
    if abs_err + tail_cert >= tol * (abs(value) + 1e-300):
        raise QuadratureError("requested tolerance not achieved", result)
    return result


def sigma_zeros_next(nu: float, zeros: list) -> list:
    """One more zero of sigma beyond the ones already found."""
    f = lambda x: bessel_sigma(nu, x)
    lo = zeros[-1] + 1e-9
    flo = f(lo)
    hi = lo
    while True:
        hi += 0.5
        if hi > SIGMA_X_CAP:
            raise RuntimeError("zero search exceeded the sigma cap")
        fhi = f(hi)
        if flo * fhi < 0.0:
            break
        lo, flo = hi, fhi
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if flo * fm <= 0.0:
            hi, fhi = mid, fm
        else:
            lo, flo = mid, fm
        if hi - lo <= 1e-14 * mid:
            break
    return [0.5 * (lo + hi)]
