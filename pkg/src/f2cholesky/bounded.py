"""Exact self-validated arithmetic: a value plus a proven absolute error bound.

A BoundedReal stores both fields as Fractions, so every operation below is
a theorem about rational endpoints rather than a floating-point estimate.
The enclosure primitives (pi, square roots, quarter powers of 2) work in
integer fixed point with directed rounding and return intervals that are
guaranteed to contain the true value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

Rat = Union[int, Fraction]


@dataclass(frozen=True)
class BoundedReal:
    """A real known to lie in [value - abs_error, value + abs_error]."""

    value: Fraction
    abs_error: Fraction

    def __post_init__(self) -> None:
        if self.abs_error < 0:
            raise ValueError("abs_error must be nonnegative")

    @classmethod
    def exact(cls, x: Rat) -> "BoundedReal":
        return cls(Fraction(x), Fraction(0))

    @classmethod
    def from_endpoints(cls, lo: Rat, hi: Rat) -> "BoundedReal":
        lo, hi = Fraction(lo), Fraction(hi)
        if hi < lo:
            raise ValueError("empty interval")
        return cls((lo + hi) / 2, (hi - lo) / 2)

    @property
    def lo(self) -> Fraction:
        return self.value - self.abs_error

    @property
    def hi(self) -> Fraction:
        return self.value + self.abs_error

    def contains(self, x: Rat) -> bool:
        return self.lo <= x <= self.hi

    def strictly_inside(self, lo: Rat, hi: Rat) -> bool:
        """Certify lo < self < hi: the whole enclosure sits in the open interval."""
        return self.lo > lo and self.hi < hi

    def encloses(self, other: "BoundedReal") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def __neg__(self) -> "BoundedReal":
        return BoundedReal(-self.value, self.abs_error)

    def __add__(self, other: "BoundedReal | Rat") -> "BoundedReal":
        if isinstance(other, BoundedReal):
            return BoundedReal(self.value + other.value, self.abs_error + other.abs_error)
        return BoundedReal(self.value + Fraction(other), self.abs_error)

    def __sub__(self, other: "BoundedReal | Rat") -> "BoundedReal":
        return self + (-other if isinstance(other, BoundedReal) else -Fraction(other))

    def __mul__(self, other: "BoundedReal | Rat") -> "BoundedReal":
        if isinstance(other, BoundedReal):
            # |xy - ab| <= |a||eb| + |b||ea| + |ea||eb| for x = a+-ea, y = b+-eb
            err = (
                abs(self.value) * other.abs_error
                + abs(other.value) * self.abs_error
                + self.abs_error * other.abs_error
            )
            return BoundedReal(self.value * other.value, err)
        f = Fraction(other)
        return BoundedReal(self.value * f, self.abs_error * abs(f))

    __rmul__ = __mul__

    def __truediv__(self, other: "BoundedReal | Rat") -> "BoundedReal":
        if isinstance(other, BoundedReal):
            if other.lo <= 0 <= other.hi:
                raise ZeroDivisionError("divisor interval contains zero")
            # exact endpoint division; works for either sign of the divisor
            candidates = [
                self.lo / other.lo,
                self.lo / other.hi,
                self.hi / other.lo,
                self.hi / other.hi,
            ]
            return BoundedReal.from_endpoints(min(candidates), max(candidates))
        f = Fraction(other)
        if f == 0:
            raise ZeroDivisionError("division by exact zero")
        return BoundedReal(self.value / f, self.abs_error / abs(f))

    def abs_interval(self) -> "BoundedReal":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return BoundedReal.from_endpoints(Fraction(0), max(-self.lo, self.hi))

    def decimal(self, digits: int) -> str:
        """Fixed-point decimal string of the midpoint, rounded to ``digits`` places."""
        return format_fraction(self.value, digits)

    def __str__(self) -> str:
        return f"{float(self.value)} +- {float(self.abs_error):.3e}"


def format_fraction(x: Fraction, digits: int) -> str:
    """Round-half-even decimal rendering without going through float."""
    if digits < 0:
        raise ValueError("digits must be nonnegative")
    scaled = x * 10**digits
    q = round(scaled)  # Fraction.__round__ is exact, ties to even
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole, frac = divmod(q, 10**digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def sci_string(x: Fraction, sig_digits: int) -> str:
    """Scientific notation with ``sig_digits`` significant digits, exact integer math.

    Safe for values like 2**250000 where float conversion would overflow.
    """
    if sig_digits < 1:
        raise ValueError("need at least one significant digit")
    if x == 0:
        return "0e+0"
    sign = "-" if x < 0 else ""
    x = abs(x)
    # decimal exponent: number of digits of floor(x) - 1, or negative for x < 1
    num, den = x.numerator, x.denominator
    e10 = len(str(num)) - len(str(den))
    while 10**e10 > x:
        e10 -= 1
    while 10 ** (e10 + 1) <= x:
        e10 += 1
    # now 10**e10 <= x < 10**(e10+1)
    shift = sig_digits - 1 - e10
    if shift >= 0:
        mant = round(x * 10**shift)
    else:
        mant = round(x / 10**-shift)
    if mant >= 10**sig_digits:  # rounding bumped us up a power
        mant //= 10
        e10 += 1
    digits = str(mant)
    if sig_digits == 1:
        body = digits
    else:
        body = f"{digits[0]}.{digits[1:]}"
    return f"{sign}{body}e{e10:+d}"


def _atan_inv_bounds(x: int, prec: int) -> tuple[int, int]:
    """Enclosure of atan(1/x) * 2**prec for integer x >= 2, as [lo, hi].

    Uses atan(1/x) = sum_k (-1)^k / ((2k+1) x^(2k+1)).  Each term is computed
    by floor division, so the true term t satisfies floor <= t < floor + 1;
    adding terms with [t, t+1] on positive terms and [-(t+1), -t] on negative
    ones keeps a rigorous enclosure.  The series alternates with decreasing
    terms, so truncating after a zero floor costs at most one more ulp each way.
    """
    one = 1 << prec
    lo = hi = 0
    xpow = x  # x^(2k+1)
    k = 0
    while True:
        t = one // ((2 * k + 1) * xpow)
        if t == 0:
            lo -= 1
            hi += 1
            break
        if k % 2 == 0:
            lo += t
            hi += t + 1
        else:
            lo -= t + 1
            hi -= t
        xpow *= x * x
        k += 1
    return lo, hi


def pi_bounds(prec: int) -> tuple[Fraction, Fraction]:
    """Rigorous enclosure of pi via 16 atan(1/5) - 4 atan(1/239)."""
    wp = prec + 16
    a5_lo, a5_hi = _atan_inv_bounds(5, wp)
    a239_lo, a239_hi = _atan_inv_bounds(239, wp)
    lo = 16 * a5_lo - 4 * a239_hi
    hi = 16 * a5_hi - 4 * a239_lo
    scale = 1 << wp
    return Fraction(lo, scale), Fraction(hi, scale)


def pi_interval(prec: int) -> BoundedReal:
    return BoundedReal.from_endpoints(*pi_bounds(prec))


def sqrt_bounds(x: Rat, prec: int) -> tuple[Fraction, Fraction]:
    """Enclosure of sqrt(x) for exact rational x >= 0, width below 2**-prec."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("sqrt of negative value")
    if x == 0:
        return Fraction(0), Fraction(0)
    num, den = x.numerator, x.denominator
    # sqrt(num/den) = sqrt(num * den) / den; scale so isqrt gives prec bits
    shift = 2 * prec
    s = num * den << shift
    r = isqrt(s)  # r^2 <= s < (r+1)^2
    scale = den << prec
    return Fraction(r, scale), Fraction(r + 1, scale)


def sqrt_interval(x: "BoundedReal | Rat", prec: int) -> BoundedReal:
    if isinstance(x, BoundedReal):
        if x.lo < 0:
            raise ValueError("sqrt of an interval reaching below zero")
        lo = sqrt_bounds(x.lo, prec)[0]
        hi = sqrt_bounds(x.hi, prec)[1]
        return BoundedReal.from_endpoints(lo, hi)
    return BoundedReal.from_endpoints(*sqrt_bounds(x, prec))


def pow2_quarters(q: int, prec: int) -> BoundedReal:
    """Enclosure of 2**(q/4) for integer q, possibly negative."""
    whole, rem = divmod(q, 4)  # rem in {0,1,2,3}
    base = BoundedReal.exact(Fraction(2**whole) if whole >= 0 else Fraction(1, 2**-whole))
    if rem == 0:
        return base
    root2 = sqrt_interval(2, prec + 8)
    if rem == 2:
        return base * root2
    root4 = sqrt_interval(root2, prec + 8)
    if rem == 1:
        return base * root4
    return base * root2 * root4
