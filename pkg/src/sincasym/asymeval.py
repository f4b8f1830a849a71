"""Floating-point evaluation of the asymptotic formulas.

Truncated series for the sinc-power integrals I(n) and J(n) and the
Bessel-ratio integrals L(nu; n) and L(nu, a; n); the two-term multi-peak
estimate for the damped integral K(n, a); the leading-order Khat; tail
bounds and the tail-decay factor xi(nu).

Exact rational coefficients are converted to float exactly once per
evaluation, by correctly-rounded big-integer division (Fraction.__float__).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .coeffgen import CoeffTable

PI = math.pi


class ValidityWarning(UserWarning):
    """Parameters outside the asymptotic validity regime (soft condition)."""


@dataclass(frozen=True)
class AsymValue:
    """A truncated asymptotic evaluation.

    first_omitted is the magnitude of the first term beyond the truncation
    (the usual heuristic error proxy); when the table holds no further
    coefficient, the magnitude of the last included term is used instead.
    """

    value: float
    k_used: int
    first_omitted: float
    prefactor: float

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "k_used": self.k_used,
            "first_omitted": self.first_omitted,
            "prefactor": self.prefactor,
        }


@dataclass(frozen=True)
class PeakEstimate:
    k: int
    contribution: float
    c2: float


def optimal_truncation(table: CoeffTable, n: float) -> int:
    """Smallest k minimising |c_k| n^-k over the stored coefficients."""
    if n <= 0:
        raise ValueError("need n > 0")
    best_k = 0
    best = abs(float(table.c[0]))
    t = 1.0
    for k in range(1, table.order + 1):
        t /= n
        mag = abs(float(table.c[k])) * t
        if mag < best:
            best, best_k = mag, k
    return best_k


def _resolve_k(table: CoeffTable, n: float, k_max) -> int:
    if k_max == "auto" or k_max is None:
        return optimal_truncation(table, n)
    k = int(k_max)
    if k < 0 or k > table.order:
        raise ValueError(f"k_max {k} outside table order {table.order}")
    return k


def _series_sum(table: CoeffTable, n: float, k_used: int) -> float:
    s = 0.0
    npow = 1.0
    for k in range(k_used + 1):
        s += float(table.signed_c(k)) * npow
        npow /= n
    return s


def _first_omitted(table: CoeffTable, n: float, k_used: int,
                   prefactor: float, extra_pow: float = 0.0) -> float:
    k = min(k_used + 1, table.order)
    return abs(prefactor) * abs(float(table.c[k])) * n ** (-(k + extra_pow))


def eval_In(n: float, table: CoeffTable, k_max="auto") -> AsymValue:
    """I(n) ~ sqrt(3 pi / 2n) * sum_k c_k / n^k."""
    if table.family != "sinc":
        raise ValueError("eval_In needs a sinc-family table")
    if n <= 0:
        raise ValueError("need n > 0")
    k_used = _resolve_k(table, n, k_max)
    prefactor = math.sqrt(3.0 * PI / (2.0 * n))
    return AsymValue(value=prefactor * _series_sum(table, n, k_used),
                     k_used=k_used,
                     first_omitted=_first_omitted(table, n, k_used, prefactor),
                     prefactor=prefactor)


def eval_Jn(n: float, table: CoeffTable, k_max="auto") -> AsymValue:
    """J(n) = 2 I(2n); evaluated literally through eval_In."""
    inner = eval_In(2.0 * n, table, k_max)
    return AsymValue(value=2.0 * inner.value, k_used=inner.k_used,
                     first_omitted=2.0 * inner.first_omitted,
                     prefactor=2.0 * inner.prefactor)


def eval_In_mp(n, table: CoeffTable, k_max: int, dps: int = 40):
    """I(n) series summed in arbitrary precision; returns an mpf.

    The exact rational coefficients let the truncated sum be formed to any
    precision.  Needed where the k-th term is below double-precision
    resolution (deep terms at large n), e.g. when arbitrating the last
    stored coefficients against the quadrature reference.
    """
    import mpmath as mp

    if table.family != "sinc":
        raise ValueError("eval_In_mp needs a sinc-family table")
    if n <= 0:
        raise ValueError("need n > 0")
    if not 0 <= k_max <= table.order:
        raise ValueError(f"k_max {k_max} outside table order {table.order}")
    with mp.workdps(dps):
        nn = mp.mpf(n)
        s = mp.mpf(0)
        for k in range(k_max + 1):
            ck = table.signed_c(k)
            s += mp.mpf(ck.numerator) / ck.denominator * nn ** (-k)
        val = +(mp.sqrt(3 * mp.pi / (2 * nn)) * s)
    return val


# -- damped sine-integral estimate ------------------------------------


def sigma_closed(m: int, a: float) -> float:
    """Closed hyperbolic form of sum_{k>=1} k^m exp(-k pi a), m in {1,2,3}."""
    if a <= 0:
        raise ValueError("need a > 0")
    sh = math.sinh(0.5 * PI * a)
    if m == 1:
        return 1.0 / (4.0 * sh ** 2)
    if m == 2:
        return math.cosh(0.5 * PI * a) / (4.0 * sh ** 3)
    if m == 3:
        return (2.0 + math.cosh(PI * a)) / (8.0 * sh ** 4)
    raise ValueError("m must be 1, 2 or 3")


def sigma_direct(m: int, a: float, terms: int = 400) -> float:
    """Direct summation of sum_{k>=1} k^m exp(-k pi a) (test reference)."""
    if a <= 0:
        raise ValueError("need a > 0")
    return math.fsum(k ** m * math.exp(-k * PI * a) for k in range(1, terms + 1))


def psi_peak_derivs(k: int) -> tuple:
    """(psi'', psi''', psi'''') of psi = -log(1 - sin^2 x / x^2) at x = k pi.

    The fourth derivative is 84/(k pi)^4 - 8/(k pi)^2; the value is pinned
    by finite differences and by consistency with the two-term peak factor.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    kp = k * PI
    return (2.0 / kp ** 2, -12.0 / kp ** 3, 84.0 / kp ** 4 - 8.0 / kp ** 2)


def saddle_c2_generic(psi2: float, psi3: float, psi4: float,
                      f1_over_f: float, f2_over_f: float) -> float:
    """Generic two-term saddle correction from local derivatives.

    c2 = (1/2 psi'') { 2 f''/f - 2 (psi'''/psi'')(f'/f)
                       + 5 psi'''^2 / 6 psi''^2 - psi''''/2 psi'' }.
    """
    return (1.0 / (2.0 * psi2)) * (
        2.0 * f2_over_f
        - 2.0 * (psi3 / psi2) * f1_over_f
        + 5.0 * psi3 ** 2 / (6.0 * psi2 ** 2)
        - psi4 / (2.0 * psi2)
    )


def peak_c2(k: int, a: float) -> float:
    """Two-term correction for the peak at x = k pi of the damped integrand."""
    if k < 1:
        raise ValueError("need k >= 1")
    kp = k * PI
    return 0.25 * (2.0 * (1.0 + a * a) * kp ** 2 - 12.0 * a * kp + 9.0)


def peak_contribution(k: int, n: float, a: float) -> PeakEstimate:
    """k pi sqrt(pi/n) {1 + c2/(2n)} exp(-k pi a): one peak of K(n, a).

    c2 follows the same convention as saddle_c2_generic (twice the
    standard Laplace correction), hence the /(2n); summing over k
    reproduces eval_Kn exactly through the closed hyperbolic sums.
    """
    c2 = peak_c2(k, a)
    contrib = (k * PI * math.sqrt(PI / n) * (1.0 + 0.5 * c2 / n)
               * math.exp(-k * PI * a))
    return PeakEstimate(k=k, contribution=contrib, c2=c2)


def kn_T1(a: float, variant: str = "derived") -> float:
    """The 1/(8n) correction factor of the K(n, a) estimate.

    variant='derived' carries pi^2 (1+a^2)(2 + cosh pi a)/sinh^2(pi a/2),
    the form consistent with the closed sums sigma_1..sigma_3; the
    'printed' variant replaces cosh(pi a) by cosh(pi a / 2) and does not
    reproduce the reference table (see the verification report).
    """
    sh2 = math.sinh(0.5 * PI * a) ** 2
    if variant == "derived":
        c = 2.0 + math.cosh(PI * a)
    elif variant == "printed":
        c = 2.0 + math.cosh(0.5 * PI * a)
    else:
        raise ValueError("variant must be 'derived' or 'printed'")
    return 9.0 - 12.0 * PI * a / math.tanh(0.5 * PI * a) + PI ** 2 * (1.0 + a * a) * c / sh2


def eval_Kn(n: float, a: float, variant: str = "derived") -> AsymValue:
    """Two-term multi-peak estimate of K(n, a).

    K(n, a) ~ pi^(3/2)/(4 sqrt(n)) {1 + T1/(8n)} cosech^2(pi a/2).
    Warns (soft condition) when a <= (2n)^(-1/2), outside the validity
    regime of the peak approximation.
    """
    if n <= 0 or a <= 0:
        raise ValueError("need n > 0 and a > 0")
    if a <= (2.0 * n) ** -0.5:
        warnings.warn("a <= (2n)^(-1/2): peak estimate outside its validity "
                      "regime", ValidityWarning, stacklevel=2)
    prefactor = PI ** 1.5 / (4.0 * math.sqrt(n) * math.sinh(0.5 * PI * a) ** 2)
    t1 = kn_T1(a, variant)
    return AsymValue(value=prefactor * (1.0 + t1 / (8.0 * n)),
                     k_used=1,
                     first_omitted=abs(prefactor * t1) / (8.0 * n * n),
                     prefactor=prefactor)


def eval_Khat(n: float, a: float) -> float:
    """Leading-order Khat(n, a) ~ pi^(3/2) cosh(pi a/2)/(4 sqrt(n) sinh^2(pi a/2))."""
    if n <= 0 or a <= 0:
        raise ValueError("need n > 0 and a > 0")
    return (PI ** 1.5 * math.cosh(0.5 * PI * a)
            / (4.0 * math.sqrt(n) * math.sinh(0.5 * PI * a) ** 2))


# -- Bessel-ratio families --------------------------------------------


def eval_ball(nu, n: float, table: CoeffTable, k_max="auto") -> AsymValue:
    """L(nu; n) ~ 2^(2nu-1)(1+nu)^nu Gamma(nu) sum_k (-1)^k c_k / n^(k+nu)."""
    nu = Fraction(nu)
    if table.family != "ball" or table.nu != nu:
        raise ValueError("table does not match the requested ball family")
    if n <= 0:
        raise ValueError("need n > 0")
    nuf = float(nu)
    k_used = _resolve_k(table, n, k_max)
    prefactor = (2.0 ** (2.0 * nuf - 1.0) * (1.0 + nuf) ** nuf
                 * math.gamma(nuf)) * n ** (-nuf)
    return AsymValue(value=prefactor * _series_sum(table, n, k_used),
                     k_used=k_used,
                     first_omitted=_first_omitted(table, n, k_used, prefactor),
                     prefactor=prefactor)


def eval_ball_general(nu, a_exp, n: float, table: CoeffTable,
                      k_max="auto") -> AsymValue:
    """L(nu, a; n) ~ 2^(a-1)(1+nu)^(a/2) Gamma(a/2) sum_k (-1)^k d_k / n^(k+a/2)."""
    nu = Fraction(nu)
    a_exp = Fraction(a_exp)
    if table.family != "ball_general" or table.nu != nu or table.a_exp != a_exp:
        raise ValueError("table does not match the requested family")
    if n * (nu + Fraction(1, 2)) <= a_exp:
        raise ValueError("convergence requires n (nu + 1/2) > a")
    nuf, af = float(nu), float(a_exp)
    k_used = _resolve_k(table, n, k_max)
    prefactor = (2.0 ** (af - 1.0) * (1.0 + nuf) ** (0.5 * af)
                 * math.gamma(0.5 * af)) * n ** (-0.5 * af)
    return AsymValue(value=prefactor * _series_sum(table, n, k_used),
                     k_used=k_used,
                     first_omitted=_first_omitted(table, n, k_used, prefactor),
                     prefactor=prefactor)


def xi(nu: float) -> float:
    """Tail-decay factor 2^nu Gamma(1+nu) / j1^nu, j1 the first zero of J_nu.

    Monotonically decreasing, below the Stirling envelope
    (2/e)^nu sqrt(2 pi nu), and equal to 2^(-1/2) at nu = 1/2.
    """
    from .oracle import first_bessel_zero

    nuf = float(nu)
    if nuf <= 0:
        raise ValueError("need nu > 0")
    j1 = first_bessel_zero(nu)
    return 2.0 ** nuf * math.gamma(1.0 + nuf) / j1 ** nuf


def tail_bound(family: str, n: float, nu=None) -> float:
    """Analytic bound on the neglected tail of the truncated integral.

    sinc family: pi^(1-n)/(n-1) for n > 1 (the x^-n envelope beyond pi).
    ball family: xi(nu)^n j1^2/((n-2) nu) for n > 2 (envelope beyond j1).
    """
    from .oracle import first_bessel_zero

    if family == "sinc":
        if n <= 1:
            raise ValueError("sinc tail bound needs n > 1")
        return PI ** (1.0 - n) / (n - 1.0)
    if family == "ball":
        if nu is None:
            raise ValueError("ball tail bound needs nu")
        if n <= 2:
            raise ValueError("ball tail bound needs n > 2")
        nuf = float(nu)
        j1 = first_bessel_zero(nu)
        return xi(nu) ** n * j1 ** 2 / ((n - 2.0) * nuf)
    raise ValueError("family must be 'sinc' or 'ball'")
