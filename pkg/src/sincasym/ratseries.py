"""Exact rational arithmetic and truncated formal power series.

Every coefficient in this package is an exact ``fractions.Fraction``
(arbitrary-precision numerator/denominator, always canonical: positive
denominator, gcd 1).  A :class:`PowerSeries` is a *truncated* series:
coefficients beyond the truncation order are unknown, not zero, and no
operation ever fabricates them.  The order of a binary operation is the
minimum of the operand orders.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[Fraction, int]

PARITY_NONE = "none"
PARITY_EVEN = "even"
PARITY_ODD = "odd"


class DegenerateDivisor(ZeroDivisionError):
    """Division by a series whose relevant leading coefficient is zero."""


class NotInvertible(ValueError):
    """Series reversion requested for a series with no compositional inverse."""


def parse_rational(text: str) -> Rational:
    """Parse 'p/q' or 'p' into an exact Rational."""
    return Fraction(text.strip())


def format_rational(r: RationalLike) -> str:
    """Render a Rational as 'num/den', omitting '/den' when den == 1."""
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def pochhammer(a: RationalLike, k: int) -> Rational:
    """Rising factorial a(a+1)...(a+k-1); exactly 1 for k = 0."""
    if k < 0:
        raise ValueError("pochhammer index must be nonnegative")
    a = Fraction(a)
    result = Fraction(1)
    for j in range(k):
        result *= a + j
    return result


def _infer_parity(coeffs: Sequence[Rational]) -> str:
    even = all(c == 0 for c in coeffs[1::2])
    odd = all(c == 0 for c in coeffs[0::2])
    if even and not odd:
        return PARITY_EVEN
    if odd and not even:
        return PARITY_ODD
    if even and odd:
        # zero series: either declaration is consistent; report even
        return PARITY_EVEN
    return PARITY_NONE


class PowerSeries:
    """Truncated power series over exact rationals.

    coeffs[j] is the degree-j coefficient; len(coeffs) == order + 1.
    Instances are immutable; all arithmetic returns new series.
    """

    __slots__ = ("coeffs", "order", "parity")

    def __init__(self, coeffs: Iterable[RationalLike], parity: str | None = None):
        cs = tuple(Fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        inferred = _infer_parity(cs)
        if parity is None:
            parity = inferred
        elif parity not in (PARITY_NONE, PARITY_EVEN, PARITY_ODD):
            raise ValueError(f"unknown parity {parity!r}")
        elif parity == PARITY_EVEN and any(c != 0 for c in cs[1::2]):
            raise ValueError("declared even parity violated by odd-degree coefficient")
        elif parity == PARITY_ODD and any(c != 0 for c in cs[0::2]):
            raise ValueError("declared odd parity violated by even-degree coefficient")
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "order", len(cs) - 1)
        object.__setattr__(self, "parity", parity)

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    # -- basics ---------------------------------------------------------

    def __repr__(self):
        body = ", ".join(format_rational(c) for c in self.coeffs)
        return f"PowerSeries([{body}], order={self.order}, parity={self.parity})"

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __getitem__(self, j: int) -> Rational:
        return self.coeffs[j]

    def valuation(self) -> int | None:
        """Degree of the first nonzero coefficient, or None for the zero series."""
        for j, c in enumerate(self.coeffs):
            if c != 0:
                return j
        return None

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series with unknown coefficients")
        return PowerSeries(self.coeffs[: order + 1])

    def derivative(self) -> "PowerSeries":
        if self.order == 0:
            return PowerSeries([Fraction(0)])
        return PowerSeries([j * c for j, c in enumerate(self.coeffs)][1:])

    def integral(self) -> "PowerSeries":
        """Term-by-term antiderivative with zero constant term; order grows by 1."""
        return PowerSeries(
            [Fraction(0)] + [c / (j + 1) for j, c in enumerate(self.coeffs)]
        )

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        if isinstance(other, PowerSeries):
            n = min(self.order, other.order)
            return PowerSeries(
                [self.coeffs[j] + other.coeffs[j] for j in range(n + 1)]
            )
        cs = list(self.coeffs)
        cs[0] += Fraction(other)
        return PowerSeries(cs)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs], parity=self.parity)

    def __sub__(self, other):
        return self + (-other if isinstance(other, PowerSeries) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return series_mul(self, other)
        q = Fraction(other)
        return PowerSeries([c * q for c in self.coeffs],
                           parity=self.parity if q != 0 else None)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return series_div(self, other)
        return self * (1 / Fraction(other))


def identity_series(order: int) -> PowerSeries:
    """The series x, truncated at the given order (>= 1)."""
    if order < 1:
        raise ValueError("identity series needs order >= 1")
    return PowerSeries([Fraction(0), Fraction(1)] + [Fraction(0)] * (order - 1))


def constant_series(value: RationalLike, order: int) -> PowerSeries:
    return PowerSeries([Fraction(value)] + [Fraction(0)] * order)


def _combine_parity(p: str, q: str) -> str:
    if p == PARITY_NONE or q == PARITY_NONE:
        return PARITY_NONE
    if p == q:
        return PARITY_EVEN
    return PARITY_ODD


def series_mul(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """Cauchy product truncated at min(order(f), order(g))."""
    n = min(f.order, g.order)
    fc, gc = f.coeffs, g.coeffs
    out = [Fraction(0)] * (n + 1)
    for i, a in enumerate(fc[: n + 1]):
        if a == 0:
            continue
        for j in range(n + 1 - i):
            b = gc[j]
            if b != 0:
                out[i + j] += a * b
    return PowerSeries(out)


def series_div(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """f/g up to truncation.

    g must have a nonzero constant term, or f and g must share a common
    leading degree d with g's degree-d coefficient nonzero; the common
    factor x^d is cancelled first.
    """
    vg = g.valuation()
    if vg is None:
        raise DegenerateDivisor("division by the zero series")
    if vg > 0:
        vf = f.valuation()
        if vf is not None and vf < vg:
            raise DegenerateDivisor(
                f"divisor has valuation {vg} but dividend has valuation {vf}"
            )
        n = min(f.order, g.order) - vg
        if n < 0:
            raise DegenerateDivisor("truncation order too low to cancel leading zeros")
        fc = f.coeffs[vg : vg + n + 1]
        gc = g.coeffs[vg : vg + n + 1]
    else:
        n = min(f.order, g.order)
        fc = f.coeffs[: n + 1]
        gc = g.coeffs[: n + 1]
    g0 = gc[0]
    out = [Fraction(0)] * (n + 1)
    for j in range(n + 1):
        acc = fc[j]
        for i in range(1, j + 1):
            if gc[i] != 0:
                acc -= gc[i] * out[j - i]
        out[j] = acc / g0
    return PowerSeries(out)


def series_log(f: PowerSeries) -> PowerSeries:
    """log f via term-by-term integration of f'/f; requires f(0) = 1."""
    if f.coeffs[0] != 1:
        raise ValueError("series_log requires constant term exactly 1")
    if f.order == 0:
        return PowerSeries([Fraction(0)])
    d = series_div(f.derivative(), f.truncate(f.order - 1))
    return d.integral()


def series_sqrt(f: PowerSeries) -> PowerSeries:
    """g with g*g = f up to truncation; requires f(0) = 1, returns g(0) = 1."""
    if f.coeffs[0] != 1:
        raise ValueError("series_sqrt requires constant term exactly 1")
    n = f.order
    out = [Fraction(0)] * (n + 1)
    out[0] = Fraction(1)
    for j in range(1, n + 1):
        acc = f.coeffs[j]
        for i in range(1, j):
            acc -= out[i] * out[j - i]
        out[j] = acc / 2
    return PowerSeries(out)


def series_pow(f: PowerSeries, alpha: RationalLike) -> PowerSeries:
    """f**alpha for rational alpha, via the standard g'f = alpha f'g recurrence.

    Requires f(0) = 1 so every coefficient stays rational.
    """
    if f.coeffs[0] != 1:
        raise ValueError("series_pow requires constant term exactly 1")
    alpha = Fraction(alpha)
    n = f.order
    out = [Fraction(0)] * (n + 1)
    out[0] = Fraction(1)
    for j in range(1, n + 1):
        acc = Fraction(0)
        for k in range(1, j + 1):
            if f.coeffs[k] != 0:
                acc += (k * (alpha + 1) - j) * f.coeffs[k] * out[j - k]
        out[j] = acc / j
    return PowerSeries(out)


def series_compose(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """f(g(x)) truncated at min(order(f), order(g)); g must have g(0) = 0."""
    if g.coeffs[0] != 0:
        raise ValueError("series_compose requires zero constant term in inner series")
    n = min(f.order, g.order)
    gt = g.truncate(n) if g.order > n else g
    acc = constant_series(f.coeffs[n], n)
    for j in range(n - 1, -1, -1):
        acc = series_mul(acc, gt) + f.coeffs[j]
    return acc


def series_revert(f: PowerSeries) -> PowerSeries:
    """Compositional inverse g with f(g(x)) = x up to truncation.

    Requires f(0) = 0 and f'(0) != 0.  Computed by the exact fixed-point
    iteration g <- (x - (f - f1 x)(g))/f1, which gains one correct order
    per pass; the test suite cross-checks against Lagrange inversion.
    """
    if f.coeffs[0] != 0:
        raise NotInvertible("reversion requires zero constant term")
    f1 = f.coeffs[1] if f.order >= 1 else Fraction(0)
    if f1 == 0:
        raise NotInvertible("reversion requires nonzero linear coefficient")
    n = f.order
    tail = PowerSeries([Fraction(0), Fraction(0)] + list(f.coeffs[2:]))
    x = identity_series(n)
    g = x * (1 / f1)
    for _ in range(n - 1):
        g = (x - series_compose(tail, g)) * (1 / f1)
    return g
