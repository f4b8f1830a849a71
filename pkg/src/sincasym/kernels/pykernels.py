"""Pure-Python double-double quadrature kernels.

Fallback implementation of the hot panel loops; the compiled extension
(_ckernels) exports the same names.  Values are (hi, lo) float pairs with
hi + lo the unevaluated exact-ish sum (~32 significant digits), built from
the classical error-free transformations (TwoSum, Dekker's TwoProd).

Per-node integrands are evaluated in double-double where cancellation or a
large power n would otherwise eat the error budget (sin x/x and the
normalised Bessel ratio sigma); panel sums are always accumulated in
double-double.
"""

from __future__ import annotations

import math

_SPLIT = 134217729.0  # 2^27 + 1


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _quick_two_sum(a, b):
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def _two_prod(a, b):
    p = a * b
    aa = _SPLIT * a
    ahi = aa - (aa - a)
    alo = a - ahi
    bb = _SPLIT * b
    bhi = bb - (bb - b)
    blo = b - bhi
    err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, err


def dd_add(ah, al, bh, bl):
    s, e = _two_sum(ah, bh)
    e += al + bl
    return _quick_two_sum(s, e)


def dd_mul(ah, al, bh, bl):
    p, e = _two_prod(ah, bh)
    e += ah * bl + al * bh
    return _quick_two_sum(p, e)


def dd_mul_f(ah, al, b):
    p, e = _two_prod(ah, b)
    e += al * b
    return _quick_two_sum(p, e)


def dd_div(ah, al, bh, bl):
    q1 = ah / bh
    rh, rl = dd_add(ah, al, *dd_mul_f(bh, bl, -q1))
    q2 = rh / bh
    rh, rl = dd_add(rh, rl, *dd_mul_f(bh, bl, -q2))
    q3 = rh / bh
    s, e = _quick_two_sum(q1, q2)
    return dd_add(s, e, q3, 0.0)


def dd_ipow(ah, al, n: int):
    """(hi, lo)^n for integer n >= 0, by binary powering."""
    rh, rl = 1.0, 0.0
    while n:
        if n & 1:
            rh, rl = dd_mul(rh, rl, ah, al)
        n >>= 1
        if n:
            ah, al = dd_mul(ah, al, ah, al)
    return rh, rl


# pi/2 split into two doubles (hi is the correctly rounded value)
_PIO2_HI = 1.5707963267948966
_PIO2_LO = 6.123233995736766e-17


def _sin_cos_taylor(rh, rl):
    """sin and cos of a double-double argument with |r| <= pi/4."""
    x2h, x2l = dd_mul(rh, rl, rh, rl)
    # sin
    sh, sl = rh, rl
    th, tl = rh, rl
    k = 1
    while True:
        th, tl = dd_mul(th, tl, x2h, x2l)
        th, tl = dd_div(th, tl, -(2.0 * k) * (2.0 * k + 1.0), 0.0)
        sh, sl = dd_add(sh, sl, th, tl)
        k += 1
        if abs(th) < 1e-35 * abs(sh) + 5e-324:
            break
    # cos
    ch, cl = 1.0, 0.0
    th, tl = 1.0, 0.0
    k = 1
    while True:
        th, tl = dd_mul(th, tl, x2h, x2l)
        th, tl = dd_div(th, tl, -(2.0 * k - 1.0) * (2.0 * k), 0.0)
        ch, cl = dd_add(ch, cl, th, tl)
        k += 1
        if abs(th) < 1e-35 * abs(ch) + 5e-324:
            break
    return sh, sl, ch, cl


def sin_dd(x: float):
    """sin(x) in double-double; argument reduction modulo pi/2.

    Accurate for |x| up to ~1e6 (reduction error grows like |x| * 1e-33).
    """
    m = math.floor(x / _PIO2_HI + 0.5)
    ph, pe = _two_prod(float(m), _PIO2_HI)
    rh, rl = dd_add(x, 0.0, -ph, -pe)
    ph, pe = _two_prod(float(m), _PIO2_LO)
    rh, rl = dd_add(rh, rl, -ph, -pe)
    sh, sl, ch, cl = _sin_cos_taylor(rh, rl)
    q = int(m) & 3
    if q == 0:
        return sh, sl
    if q == 1:
        return ch, cl
    if q == 2:
        return -sh, -sl
    return -ch, -cl


def cos_dd(x: float):
    """cos(x) in double-double; same reduction as sin_dd."""
    m = math.floor(x / _PIO2_HI + 0.5)
    ph, pe = _two_prod(float(m), _PIO2_HI)
    rh, rl = dd_add(x, 0.0, -ph, -pe)
    ph, pe = _two_prod(float(m), _PIO2_LO)
    rh, rl = dd_add(rh, rl, -ph, -pe)
    sh, sl, ch, cl = _sin_cos_taylor(rh, rl)
    q = int(m) & 3
    if q == 0:
        return ch, cl
    if q == 1:
        return -sh, -sl
    if q == 2:
        return -ch, -cl
    return sh, sl


def sinc_dd(x: float):
    """sin(x)/x in double-double; exactly 1 at x = 0."""
    if x == 0.0:
        return 1.0, 0.0
    sh, sl = sin_dd(x)
    return dd_div(sh, sl, x, 0.0)


def sigma_dd(nu_h: float, nu_l: float, x: float):
    """Normalised Bessel ratio sigma(x) = Gamma(1+nu) J_nu(x) / (x/2)^nu.

    Alternating power series sum_k (-x^2/4)^k / (k! (nu+1)_k) in
    double-double; nu is passed as a double-double pair so exact rational
    orders lose nothing.  Caller enforces the |x| cap.
    """
    x2h, x2l = _two_prod(x, x)
    x2h *= -0.25
    x2l *= -0.25
    sh, sl = 1.0, 0.0
    th, tl = 1.0, 0.0
    k = 1.0
    while True:
        dh, dl = dd_add(nu_h, nu_l, k, 0.0)
        dh, dl = dd_mul_f(dh, dl, k)
        th, tl = dd_mul(th, tl, x2h, x2l)
        th, tl = dd_div(th, tl, dh, dl)
        sh, sl = dd_add(sh, sl, th, tl)
        k += 1.0
        if abs(th) < 1e-35 * (abs(sh) + 1e-300) and k * k > -x2h:
            break
        if k > 500.0:
            break
    return sh, sl


def _map_node(c, h, t):
    return c + h * t


def panel_sinc_pow(n: float, lo: float, hi: float, xs, ws,
                   use_abs: bool):
    """sum of w * (sin x / x)^n over Gauss nodes mapped to [lo, hi].

    Integer n uses double-double binary powering; non-integer n falls back
    to float pow of |sinc| (only meaningful with use_abs).
    """
    c = 0.5 * (lo + hi)
    h = 0.5 * (hi - lo)
    is_int = n == int(n)
    ni = int(n)
    ah, al = 0.0, 0.0
    for i in range(len(xs)):
        x = _map_node(c, h, xs[i])
        sh, sl = sinc_dd(x)
        if use_abs and sh < 0.0:
            sh, sl = -sh, -sl
        if is_int:
            ph, pl = dd_ipow(sh, sl, ni)
        else:
            ph, pl = math.pow(abs(sh), n), 0.0
        ph, pl = dd_mul_f(ph, pl, ws[i] * h)
        ah, al = dd_add(ah, al, ph, pl)
    return ah, al


def panel_kn(n: float, a: float, lo: float, hi: float, xs, ws):
    """sum of w * exp(-a x) (1 - sin^2 x / x^2)^n over mapped Gauss nodes."""
    c = 0.5 * (lo + hi)
    h = 0.5 * (hi - lo)
    is_int = n == int(n)
    ni = int(n)
    ah, al = 0.0, 0.0
    for i in range(len(xs)):
        x = _map_node(c, h, xs[i])
        sh, sl = sinc_dd(x)
        bh, bl = dd_mul(sh, sl, sh, sl)
        bh, bl = dd_add(1.0, 0.0, -bh, -bl)
        if is_int:
            ph, pl = dd_ipow(bh, bl, ni)
        else:
            ph, pl = math.pow(abs(bh), n), 0.0
        ph, pl = dd_mul_f(ph, pl, math.exp(-a * x) * ws[i] * h)
        ah, al = dd_add(ah, al, ph, pl)
    return ah, al


def panel_khat(n: float, a: float, lo: float, hi: float, xs, ws):
    """sum of w * exp(-a x) (1 - cos^2 x / x^2)^n over mapped Gauss nodes."""
    c = 0.5 * (lo + hi)
    h = 0.5 * (hi - lo)
    is_int = n == int(n)
    ni = int(n)
    ah, al = 0.0, 0.0
    for i in range(len(xs)):
        x = _map_node(c, h, xs[i])
        ch_, cl_ = cos_dd(x)
        bh, bl = dd_mul(ch_, cl_, ch_, cl_)
        bh, bl = dd_div(bh, bl, x * x, 0.0)
        bh, bl = dd_add(1.0, 0.0, -bh, -bl)
        if is_int:
            ph, pl = dd_ipow(bh, bl, ni)
        else:
            ph, pl = math.pow(abs(bh), n), 0.0
        ph, pl = dd_mul_f(ph, pl, math.exp(-a * x) * ws[i] * h)
        ah, al = dd_add(ah, al, ph, pl)
    return ah, al


def panel_ball_pow(nu_h: float, nu_l: float, n: float, r: int, s: int,
                   lo: float, hi: float, xs, ws):
    """sum of w * s u^(r-1) |sigma(u^s)|^n over mapped Gauss nodes.

    Power substitution x = u^s for rational exponent a = r/s: removes the
    algebraic x^(a-1) singularity at the origin (the transformed integrand
    is analytic), used for the first panel of the Bessel-ratio integrals.
    """
    c = 0.5 * (lo + hi)
    h = 0.5 * (hi - lo)
    is_int = n == int(n)
    ni = int(n)
    ah, al = 0.0, 0.0
    for i in range(len(xs)):
        u = _map_node(c, h, xs[i])
        x = u ** s
        sh, sl = sigma_dd(nu_h, nu_l, x)
        if sh < 0.0:
            sh, sl = -sh, -sl
        if is_int:
            ph, pl = dd_ipow(sh, sl, ni)
        else:
            ph, pl = math.pow(sh, n), 0.0
        ph, pl = dd_mul_f(ph, pl, float(s) * u ** (r - 1) * ws[i] * h)
        ah, al = dd_add(ah, al, ph, pl)
    return ah, al


def panel_ball(nu_h: float, nu_l: float, n: float, a_exp: float,
               lo: float, hi: float, xs, ws):
    """sum of w * |sigma(x)|^n x^(a-1) over mapped Gauss nodes."""
    c = 0.5 * (lo + hi)
    h = 0.5 * (hi - lo)
    is_int = n == int(n)
    ni = int(n)
    ah, al = 0.0, 0.0
    for i in range(len(xs)):
        x = _map_node(c, h, xs[i])
        sh, sl = sigma_dd(nu_h, nu_l, x)
        if sh < 0.0:
            sh, sl = -sh, -sl
        if is_int:
            ph, pl = dd_ipow(sh, sl, ni)
        else:
            ph, pl = math.pow(sh, n), 0.0
        ph, pl = dd_mul_f(ph, pl, math.pow(x, a_exp - 1.0) * ws[i] * h)
        ah, al = dd_add(ah, al, ph, pl)
    return ah, al
