# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled double-double quadrature kernels.

Mirror of pykernels with C doubles throughout; the module exports the
same names and the backend selector prefers it when the build succeeded.
"""

from libc.math cimport exp, fabs, floor, pow, sin, cos

cdef enum:
    MAX_ORDER = 128

cdef double SPLIT = 134217729.0  # 2^27 + 1
cdef double PIO2_HI = 1.5707963267948966
cdef double PIO2_LO = 6.123233995736766e-17


cdef struct dd:
    double h
    double l


cdef inline dd two_sum(double a, double b) noexcept:
    cdef dd r
    cdef double bb
    r.h = a + b
    bb = r.h - a
    r.l = (a - (r.h - bb)) + (b - bb)
    return r


cdef inline dd quick_two_sum(double a, double b) noexcept:
    cdef dd r
    r.h = a + b
    r.l = b - (r.h - a)
    return r


cdef inline dd two_prod(double a, double b) noexcept:
    cdef dd r
    cdef double aa, ahi, alo, bb, bhi, blo
    r.h = a * b
    aa = SPLIT * a
    ahi = aa - (aa - a)
    alo = a - ahi
    bb = SPLIT * b
    bhi = bb - (bb - b)
    blo = b - bhi
    r.l = ((ahi * bhi - r.h) + ahi * blo + alo * bhi) + alo * blo
    return r


cdef inline dd dd_add_(dd a, dd b) noexcept:
    # association matches the fallback kernels bitwise: e + (al + bl)
    cdef dd s = two_sum(a.h, b.h)
    return quick_two_sum(s.h, s.l + (a.l + b.l))


cdef inline dd dd_mul_(dd a, dd b) noexcept:
    cdef dd p = two_prod(a.h, b.h)
    return quick_two_sum(p.h, p.l + (a.h * b.l + a.l * b.h))


cdef inline dd dd_mul_f_(dd a, double b) noexcept:
    cdef dd p = two_prod(a.h, b)
    return quick_two_sum(p.h, p.l + a.l * b)


cdef inline dd dd_neg(dd a) noexcept:
    cdef dd r
    r.h = -a.h
    r.l = -a.l
    return r


cdef inline dd dd_from(double h) noexcept:
    cdef dd r
    r.h = h
    r.l = 0.0
    return r


cdef inline dd dd_div_(dd a, dd b) noexcept:
    cdef double q1, q2, q3
    cdef dd r, s
    q1 = a.h / b.h
    r = dd_add_(a, dd_neg(dd_mul_f_(b, q1)))
    q2 = r.h / b.h
    r = dd_add_(r, dd_neg(dd_mul_f_(b, q2)))
    q3 = r.h / b.h
    s = quick_two_sum(q1, q2)
    return dd_add_(s, dd_from(q3))


cdef inline dd dd_ipow_(dd a, long n) noexcept:
    cdef dd r = dd_from(1.0)
    while n:
        if n & 1:
            r = dd_mul_(r, a)
        n >>= 1
        if n:
            a = dd_mul_(a, a)
    return r


cdef inline void sin_cos_taylor(dd r, dd *s_out, dd *c_out) noexcept:
    cdef dd x2 = dd_mul_(r, r)
    cdef dd s = r
    cdef dd t = r
    cdef dd c = dd_from(1.0)
    cdef double k = 1.0
    while True:
        t = dd_mul_(t, x2)
        t = dd_div_(t, dd_from(-(2.0 * k) * (2.0 * k + 1.0)))
        s = dd_add_(s, t)
        k += 1.0
        if fabs(t.h) < 1e-35 * fabs(s.h) + 5e-324:
            break
    t = dd_from(1.0)
    k = 1.0
    while True:
        t = dd_mul_(t, x2)
        t = dd_div_(t, dd_from(-(2.0 * k - 1.0) * (2.0 * k)))
        c = dd_add_(c, t)
        k += 1.0
        if fabs(t.h) < 1e-35 * fabs(c.h) + 5e-324:
            break
    s_out[0] = s
    c_out[0] = c


cdef inline dd sin_dd_(double x) noexcept:
    cdef double m = floor(x / PIO2_HI + 0.5)
    cdef dd r = dd_add_(dd_from(x), dd_neg(two_prod(m, PIO2_HI)))
    cdef dd s, c
    r = dd_add_(r, dd_neg(two_prod(m, PIO2_LO)))
    sin_cos_taylor(r, &s, &c)
    cdef long q = (<long> m) & 3
    if q == 0:
        return s
    if q == 1:
        return c
    if q == 2:
        return dd_neg(s)
    return dd_neg(c)


cdef inline dd cos_dd_(double x) noexcept:
    cdef double m = floor(x / PIO2_HI + 0.5)
    cdef dd r = dd_add_(dd_from(x), dd_neg(two_prod(m, PIO2_HI)))
    cdef dd s, c
    r = dd_add_(r, dd_neg(two_prod(m, PIO2_LO)))
    sin_cos_taylor(r, &s, &c)
    cdef long q = (<long> m) & 3
    if q == 0:
        return c
    if q == 1:
        return dd_neg(s)
    if q == 2:
        return dd_neg(c)
    return s


cdef inline dd sinc_dd_(double x) noexcept:
    if x == 0.0:
        return dd_from(1.0)
    return dd_div_(sin_dd_(x), dd_from(x))


cdef inline dd sigma_dd_(double nu_h, double nu_l, double x) noexcept:
    cdef dd nu, x2, s, t, d
    cdef double k = 1.0
    x2 = two_prod(x, x)
    x2.h *= -0.25
    x2.l *= -0.25
    nu.h = nu_h
    nu.l = nu_l
    s = dd_from(1.0)
    t = dd_from(1.0)
    while True:
        d = dd_mul_f_(dd_add_(nu, dd_from(k)), k)
        t = dd_mul_(t, x2)
        t = dd_div_(t, d)
        s = dd_add_(s, t)
        k += 1.0
        if fabs(t.h) < 1e-35 * (fabs(s.h) + 1e-300) and k * k > -x2.h:
            break
        if k > 500.0:
            break
    return s


cdef int load_nodes(object xs, object ws, double *xa, double *wa) except -1:
    cdef Py_ssize_t m = len(xs)
    cdef Py_ssize_t i
    if m > MAX_ORDER:
        raise ValueError("quadrature order above compiled limit")
    for i in range(m):
        xa[i] = xs[i]
        wa[i] = ws[i]
    return <int> m


def sin_dd(double x):
    """sin(x) as a double-double (hi, lo) pair."""
    cdef dd r = sin_dd_(x)
    return r.h, r.l


def cos_dd(double x):
    """cos(x) as a double-double (hi, lo) pair."""
    cdef dd r = cos_dd_(x)
    return r.h, r.l


def sinc_dd(double x):
    """sin(x)/x as a double-double pair; exactly 1 at x = 0."""
    cdef dd r = sinc_dd_(x)
    return r.h, r.l


def sigma_dd(double nu_h, double nu_l, double x):
    """Normalised Bessel ratio sigma(x) as a double-double pair."""
    cdef dd r = sigma_dd_(nu_h, nu_l, x)
    return r.h, r.l


def panel_sinc_pow(double n, double lo, double hi, xs, ws, bint use_abs):
    """sum of w * (sin x / x)^n over Gauss nodes mapped to [lo, hi]."""
    cdef double xa[MAX_ORDER]
    cdef double wa[MAX_ORDER]
    cdef int m = load_nodes(xs, ws, xa, wa)
    cdef double c = 0.5 * (lo + hi)
    cdef double h = 0.5 * (hi - lo)
    cdef bint is_int = n == <long> n
    cdef long ni = <long> n
    cdef dd acc = dd_from(0.0)
    cdef dd s, p
    cdef double x
    cdef int i
    for i in range(m):
        x = c + h * xa[i]
        s = sinc_dd_(x)
        if use_abs and s.h < 0.0:
            s = dd_neg(s)
        if is_int:
            p = dd_ipow_(s, ni)
        else:
            p = dd_from(pow(fabs(s.h), n))
        p = dd_mul_f_(p, wa[i] * h)
        acc = dd_add_(acc, p)
    return acc.h, acc.l


def panel_kn(double n, double a, double lo, double hi, xs, ws):
    """sum of w * exp(-a x) (1 - sin^2 x / x^2)^n over mapped Gauss nodes."""
    cdef double xa[MAX_ORDER]
    cdef double wa[MAX_ORDER]
    cdef int m = load_nodes(xs, ws, xa, wa)
    cdef double c = 0.5 * (lo + hi)
    cdef double h = 0.5 * (hi - lo)
    cdef bint is_int = n == <long> n
    cdef long ni = <long> n
    cdef dd acc = dd_from(0.0)
    cdef dd s, b, p
    cdef double x
    cdef int i
    for i in range(m):
        x = c + h * xa[i]
        s = sinc_dd_(x)
        b = dd_add_(dd_from(1.0), dd_neg(dd_mul_(s, s)))
        if is_int:
            p = dd_ipow_(b, ni)
        else:
            p = dd_from(pow(fabs(b.h), n))
        p = dd_mul_f_(p, exp(-a * x) * wa[i] * h)
        acc = dd_add_(acc, p)
    return acc.h, acc.l


def panel_khat(double n, double a, double lo, double hi, xs, ws):
    """sum of w * exp(-a x) (1 - cos^2 x / x^2)^n over mapped Gauss nodes."""
    cdef double xa[MAX_ORDER]
    cdef double wa[MAX_ORDER]
    cdef int m = load_nodes(xs, ws, xa, wa)
    cdef double c = 0.5 * (lo + hi)
    cdef double h = 0.5 * (hi - lo)
    cdef bint is_int = n == <long> n
    cdef long ni = <long> n
    cdef dd acc = dd_from(0.0)
    cdef dd cc, b, p
    cdef double x
    cdef int i
    for i in range(m):
        x = c + h * xa[i]
        cc = cos_dd_(x)
        b = dd_mul_(cc, cc)
        b = dd_div_(b, dd_from(x * x))
        b = dd_add_(dd_from(1.0), dd_neg(b))
        if is_int:
            p = dd_ipow_(b, ni)
        else:
            p = dd_from(pow(fabs(b.h), n))
        p = dd_mul_f_(p, exp(-a * x) * wa[i] * h)
        acc = dd_add_(acc, p)
    return acc.h, acc.l


def panel_ball_pow(double nu_h, double nu_l, double n, long r, long s_exp,
                   double lo, double hi, xs, ws):
    """sum of w * s u^(r-1) |sigma(u^s)|^n over mapped Gauss nodes."""
    cdef double xa[MAX_ORDER]
    cdef double wa[MAX_ORDER]
    cdef int m = load_nodes(xs, ws, xa, wa)
    cdef double c = 0.5 * (lo + hi)
    cdef double h = 0.5 * (hi - lo)
    cdef bint is_int = n == <long> n
    cdef long ni = <long> n
    cdef dd acc = dd_from(0.0)
    cdef dd sg, p
    cdef double u, x
    cdef int i
    for i in range(m):
        u = c + h * xa[i]
        x = pow(u, <double> s_exp)
        sg = sigma_dd_(nu_h, nu_l, x)
        if sg.h < 0.0:
            sg = dd_neg(sg)
        if is_int:
            p = dd_ipow_(sg, ni)
        else:
            p = dd_from(pow(sg.h, n))
        p = dd_mul_f_(p, (<double> s_exp) * pow(u, <double> (r - 1))
                      * wa[i] * h)
        acc = dd_add_(acc, p)
    return acc.h, acc.l


def panel_ball(double nu_h, double nu_l, double n, double a_exp,
               double lo, double hi, xs, ws):
    """sum of w * |sigma(x)|^n x^(a-1) over mapped Gauss nodes."""
    cdef double xa[MAX_ORDER]
    cdef double wa[MAX_ORDER]
    cdef int m = load_nodes(xs, ws, xa, wa)
    cdef double c = 0.5 * (lo + hi)
    cdef double h = 0.5 * (hi - lo)
    cdef bint is_int = n == <long> n
    cdef long ni = <long> n
    cdef dd acc = dd_from(0.0)
    cdef dd sg, p
    cdef double x
    cdef int i
    for i in range(m):
        x = c + h * xa[i]
        sg = sigma_dd_(nu_h, nu_l, x)
        if sg.h < 0.0:
            sg = dd_neg(sg)
        if is_int:
            p = dd_ipow_(sg, ni)
        else:
            p = dd_from(pow(sg.h, n))
        p = dd_mul_f_(p, pow(x, a_exp - 1.0) * wa[i] * h)
        acc = dd_add_(acc, p)
    return acc.h, acc.l
