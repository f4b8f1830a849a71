"""Asymptotics of sinc-power and Bessel-power integrals.

Exact rational coefficient generation for the large-n expansions of

    I(n)       = integral of (sin x / x)^n
    J(n)       = integral of ((1 - cos x)/(x^2/2))^n
    K(n, a)    = integral of exp(-a x) (1 - sin^2 x / x^2)^n
    Khat(n, a) = the cos^2 variant from x = 1
    L(nu; n), L(nu, a; n) = Bessel-ratio powers against x^(2nu-1) / x^(a-1)

together with floating-point evaluators, an independent high-precision
quadrature oracle, and a verification suite reproducing the published
reference tables.
"""

from .coeffgen import (
    CoeffTable,
    coeffs_In,
    coeffs_ball,
    coeffs_ball_general,
)
from .ratseries import PowerSeries, Rational, format_rational, parse_rational
from .asymeval import (
    AsymValue,
    ValidityWarning,
    eval_In,
    eval_Jn,
    eval_Kn,
    eval_Khat,
    eval_ball,
    eval_ball_general,
    optimal_truncation,
    tail_bound,
    xi,
)
from .oracle import (
    QuadResult,
    QuadratureError,
    bessel_sigma,
    first_bessel_zero,
    integrate_In,
    integrate_Khat,
    integrate_Kn,
    integrate_ball,
)
from .kernels import BACKEND

__version__ = "1.0.0"

__all__ = [
    "AsymValue",
    "BACKEND",
    "CoeffTable",
    "PowerSeries",
    "QuadResult",
    "QuadratureError",
    "Rational",
    "ValidityWarning",
    "bessel_sigma",
    "coeffs_In",
    "coeffs_ball",
    "coeffs_ball_general",
    "eval_In",
    "eval_Jn",
    "eval_Kn",
    "eval_Khat",
    "eval_ball",
    "eval_ball_general",
    "first_bessel_zero",
    "format_rational",
    "integrate_In",
    "integrate_Khat",
    "integrate_Kn",
    "integrate_ball",
    "optimal_truncation",
    "parse_rational",
    "tail_bound",
    "xi",
]
