"""Coefficient pipelines for the sinc-power and Bessel-power integral families.

Builds the phase series tau^2 = -log(base), performs the scaled
substitution x = s*u with s^2 rational, reverts the series exactly, and
emits the asymptotic coefficient tables:

  sinc family          I(n) ~ sqrt(3 pi / 2n) * sum_k c_k / n^k
  ball family          L(nu; n) ~ 2^(2nu-1) (1+nu)^nu Gamma(nu)
                                  * sum_k (-1)^k c_k / n^(k+nu)
  ball_general family  same with exponent a in place of 2 nu,
                       coefficients d_k and prefactor Gamma(a/2).

Every coefficient is an exact Rational; no floating point enters here.
Sign convention: the sinc table stores signed coefficients (the printed
table values); ball tables store the positive-leading b_k with the
alternating (-1)^k factor applied at evaluation time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .ratseries import (
    PowerSeries,
    Rational,
    RationalLike,
    format_rational,
    pochhammer,
    series_log,
    series_mul,
    series_pow,
    series_revert,
)

DEFAULT_K_SINC = 12
DEFAULT_K_BALL = 6

COEFF_SCHEMA_VERSION = 1

# tau0 = |log(3 pi / 2) + pi i|^(1/2): nearest singularity of dx/dtau for
# the sinc family (x = 3 pi / 2, since x = pi maps to infinity).
SINC_RADIUS_NOTE = (
    "tau0 = |log(3*pi/2) + pi*i|^(1/2) ~= "
    f"{math.sqrt(math.hypot(math.log(1.5 * math.pi), math.pi)):.4f}; "
    "the asymptotic series is divergent (integration extends beyond tau0)"
)

BALL_RADIUS_NOTE = (
    "tau0^2 = log(1/sigma(j'_nu2)) with j'_nu2 the second zero of J_nu'; "
    "the asymptotic series is divergent (integration extends beyond tau0)"
)


@dataclass(frozen=True)
class CoeffTable:
    """Exact coefficients for one integral family.

    b holds the reversion-derivative coefficients, c the final asymptotic
    coefficients (c_k or d_k).  ``alternating`` records whether the series
    carries an explicit (-1)^k: the effective k-th term coefficient is
    ``signed_c(k)`` either way.
    """

    family: str                      # 'sinc' | 'ball' | 'ball_general'
    scale_sq: Rational               # s^2 in the substitution x = s*u
    b: tuple
    c: tuple
    order: int
    nu: Optional[Rational] = None
    a_exp: Optional[Rational] = None
    radius_note: str = ""

    def __post_init__(self):
        if len(self.b) != self.order + 1 or len(self.c) != self.order + 1:
            raise ValueError("coefficient lists must have length order + 1")
        if self.b[0] != 1 or self.c[0] != 1:
            raise ValueError("leading coefficients must be exactly 1")

    @property
    def alternating(self) -> bool:
        return self.family != "sinc"

    def signed_c(self, k: int) -> Rational:
        """Effective signed coefficient of the k-th asymptotic term."""
        if self.alternating and k % 2:
            return -self.c[k]
        return self.c[k]

    def to_text(self) -> str:
        lines = [f"# sincasym coefficient table v{COEFF_SCHEMA_VERSION}",
                 f"# family: {self.family}"]
        if self.nu is not None:
            lines.append(f"# nu: {format_rational(self.nu)}")
        if self.a_exp is not None:
            lines.append(f"# a: {format_rational(self.a_exp)}")
        lines.append(f"# scale_sq: {format_rational(self.scale_sq)}")
        lines.append(f"# order: {self.order}")
        lines.append(f"# radius: {self.radius_note}")
        for k, ck in enumerate(self.c):
            lines.append(f"{k}: {format_rational(ck)}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        d = {
            "schema_version": COEFF_SCHEMA_VERSION,
            "family": self.family,
            "scale_sq": format_rational(self.scale_sq),
            "order": self.order,
            "alternating": self.alternating,
            "b": [format_rational(x) for x in self.b],
            "c": [format_rational(x) for x in self.c],
            "radius_note": self.radius_note,
        }
        if self.nu is not None:
            d["nu"] = format_rational(self.nu)
        if self.a_exp is not None:
            d["a"] = format_rational(self.a_exp)
        return d


def sinc_series(order: int) -> PowerSeries:
    """sin(x)/x as an even series through the given degree."""
    coeffs = [Fraction(0)] * (order + 1)
    for k in range(0, order // 2 + 1):
        coeffs[2 * k] = Fraction((-1) ** k, math.factorial(2 * k + 1))
    return PowerSeries(coeffs)


def ball_sigma_series(nu: RationalLike, order: int) -> PowerSeries:
    """sigma(x) = sum_k (-x^2/4)^k / (k! (nu+1)_k) through the given degree."""
    nu = Fraction(nu)
    coeffs = [Fraction(0)] * (order + 1)
    term = Fraction(1)
    coeffs[0] = term
    for k in range(1, order // 2 + 1):
        term /= Fraction(-4) * k * (nu + k)
        coeffs[2 * k] = term
    return PowerSeries(coeffs)


def sinc_tau2_series(K: int) -> PowerSeries:
    """tau^2 = log(x / sin x), exact even series through degree 2K."""
    if K < 2:
        raise ValueError("need K >= 2")
    return -series_log(sinc_series(2 * K))


def ball_tau2_series(nu: RationalLike, K: int) -> PowerSeries:
    """tau^2 = -log(sigma(x)), exact even series through degree 2K."""
    nu = Fraction(nu)
    if nu <= 0:
        raise ValueError("need nu > 0")
    if K < 2:
        raise ValueError("need K >= 2")
    return -series_log(ball_sigma_series(nu, 2 * K))


def _compress_even(f: PowerSeries) -> PowerSeries:
    """Rewrite an even series in x as a series in w = x^2 (half the order)."""
    if any(c != 0 for c in f.coeffs[1::2]):
        raise ValueError("series is not even")
    return PowerSeries(f.coeffs[0::2])


def _scaled_reversion(tau2: PowerSeries, scale_sq: RationalLike, K: int,
                      alpha: RationalLike) -> list:
    """Coefficients e_k of [u/tau]^alpha * du/dtau as an even series in tau.

    tau2 is the even series of tau^2 in x; the substitution x = s*u with
    s^2 = scale_sq makes the u-series monic so every step is rational.
    Internally everything is done in the squared variables w = tau^2 and
    z = u^2: with w = Q(z) and z = Z(w) its reversion,

        du/dtau            = Z'(w) * M(w)^(-1/2),   M := Z(w)/w,
        [u/tau]^alpha      = M(w)^(alpha/2),

    so e_k = [w^k] Z'(w) * M(w)^((alpha-1)/2), at half the naive order.
    """
    scale_sq = Fraction(scale_sq)
    if tau2.coeffs[0] != 0:
        raise ValueError("tau^2 series must have zero constant term")
    if tau2.order < 2 * K + 2:
        raise ValueError(f"tau^2 series order {tau2.order} too low for K={K}")
    p = _compress_even(tau2.truncate(2 * K + 2))   # series in x^2, order K+1
    if p.coeffs[1] * scale_sq != 1:
        raise ValueError(
            "scaling mismatch: leading coefficient times scale_sq must be 1"
        )
    # Q(z) = tau^2 with z = (x/s)^2:  Q_j = p_j * scale_sq^j
    q = PowerSeries([pj * scale_sq**j for j, pj in enumerate(p.coeffs)])
    z_of_w = series_revert(q)                      # order K+1, monic
    m = PowerSeries(z_of_w.coeffs[1:])             # M(w) = Z(w)/w, M(0)=1
    zprime = z_of_w.derivative()                   # order K
    e = series_mul(zprime, series_pow(m, (Fraction(alpha) - 1) / 2))
    return list(e.coeffs[: K + 1])


def revert_scaled(tau2: PowerSeries, scale_sq: RationalLike, K: int) -> list:
    """b_k with dx/dtau = s * sum_k b_k tau^(2k), s^2 = scale_sq.  Exact."""
    return _scaled_reversion(tau2, scale_sq, K, alpha=0)


def coeffs_In(K: int = DEFAULT_K_SINC) -> CoeffTable:
    """Sinc-family table: c_k = b_k * (1/2)_k, signed as printed."""
    if K < 0:
        raise ValueError("need K >= 0")
    Kw = max(K, 2)
    tau2 = sinc_tau2_series(Kw + 1)
    b = revert_scaled(tau2, 6, Kw)[: K + 1]
    c = [bk * pochhammer(Fraction(1, 2), k) for k, bk in enumerate(b)]
    return CoeffTable(family="sinc", scale_sq=Fraction(6), b=tuple(b),
                      c=tuple(c), order=K, radius_note=SINC_RADIUS_NOTE)


def _ball_table(nu: Fraction, a_exp: Fraction, K: int, family: str) -> CoeffTable:
    Kw = max(K, 2)
    tau2 = ball_tau2_series(nu, Kw + 1)
    scale_sq = 4 * (1 + nu)
    e = _scaled_reversion(tau2, scale_sq, Kw, alpha=a_exp - 1)
    # e_k = (-1)^k b_k; the table stores the positive-leading b_k
    b = [(-1) ** k * ek for k, ek in enumerate(e[: K + 1])]
    c = [bk * pochhammer(a_exp / 2, k) for k, bk in enumerate(b)]
    return CoeffTable(family=family, scale_sq=scale_sq, b=tuple(b), c=tuple(c),
                      order=K, nu=nu,
                      a_exp=a_exp if family == "ball_general" else None,
                      radius_note=BALL_RADIUS_NOTE)


def coeffs_ball(nu: RationalLike, K: int = DEFAULT_K_BALL) -> CoeffTable:
    """Ball-family table: c_k = b_k(nu) * (nu)_k, with (-1)^k applied at eval."""
    nu = Fraction(nu)
    if nu <= 0:
        raise ValueError("need nu > 0")
    if K < 0:
        raise ValueError("need K >= 0")
    return _ball_table(nu, 2 * nu, K, "ball")


def coeffs_ball_general(nu: RationalLike, a_exp: RationalLike,
                        K: int = DEFAULT_K_BALL) -> CoeffTable:
    """Generalised-exponent table: d_k = b_k * (a/2)_k, (-1)^k applied at eval."""
    nu = Fraction(nu)
    a_exp = Fraction(a_exp)
    if nu <= 0 or a_exp <= 0:
        raise ValueError("need nu > 0 and a > 0")
    if K < 0:
        raise ValueError("need K >= 0")
    return _ball_table(nu, a_exp, K, "ball_general")
