"""Certified constants and growth estimates for the class totals.

The totals grow like c * 2**(n(n+4)/4) / n**1.5 with one constant for even n
and one for odd n.  Both constants are theta-like bilateral sums

    alpha      = 2**1.5 / sqrt(pi) * sum_j (6j+1) * 2**-(3j^2+j)
    beta       = 2**1.5 / sqrt(pi) * sum_j (6j+2) * 2**-(3j^2+2j)
    beta_prime = 2**1.25 / sqrt(pi) * sum_j (6j+2) * 2**-(3j^2+2j)

over all integers j, so beta_prime = beta / 2**0.25 exactly.  Partial sums
are exact dyadic rationals; the omitted mass is bounded by a geometric
majorant, so every value returned here carries a proven error bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bounded import BoundedReal, pi_interval, pow2_quarters, sqrt_interval
from .counting import unified_count

SERIES_KINDS = ("alpha", "beta")
CONSTANT_NAMES = ("alpha", "beta", "beta_prime")

# Sum of |term(j)| + |term(-j)| is at most (12j+4) * 2**-(3j^2-2j) for either
# series; the ratio of consecutive majorants is below 1/64 from j = 1 on,
# so the tail past J costs at most majorant(J) * 64/63.
_TAIL_GEOMETRIC = Fraction(64, 63)


def _coef_exp(kind: str, j: int) -> tuple[int, int]:
    if kind == "alpha":
        return 6 * j + 1, 3 * j * j + j
    if kind == "beta":
        return 6 * j + 2, 3 * j * j + 2 * j
    raise ValueError(f"unknown series {kind!r}, expected one of {SERIES_KINDS}")


def _pair_majorant(j: int) -> Fraction:
    return Fraction(12 * j + 4, 1 << (3 * j * j - 2 * j))


def tail_bound(j_cap: int) -> Fraction:
    """Proven bound on the total mass of all terms with |j| >= j_cap >= 1."""
    if j_cap < 1:
        raise ValueError("tail bound needs j_cap >= 1")
    return _pair_majorant(j_cap) * _TAIL_GEOMETRIC


@dataclass(frozen=True)
class DyadicSum:
    """Exact partial sum numerator / 2**exponent plus a bound on the rest."""

    kind: str
    j_cap: int
    numerator: int
    exponent: int
    tail: Fraction

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def interval(self) -> BoundedReal:
        return BoundedReal(self.value, self.tail)


def series_sum(kind: str, j_cap: int) -> DyadicSum:
    """Sum the series over |j| < j_cap exactly; the tail is certified."""
    if j_cap < 1:
        raise ValueError("j_cap must be at least 1")
    terms = [_coef_exp(kind, j) for j in range(-(j_cap - 1), j_cap)]
    top = max(e for _, e in terms)
    num = sum(coef << (top - e) for coef, e in terms)
    return DyadicSum(kind, j_cap, num, top, tail_bound(j_cap))


def constant(name: str, digits: int = 12) -> BoundedReal:
    """One of the growth constants with abs_error certified below 10**-digits."""
    if name not in CONSTANT_NAMES:
        raise ValueError(f"unknown constant {name!r}, expected one of {CONSTANT_NAMES}")
    if digits < 1:
        raise ValueError("digits must be at least 1")
    need = Fraction(1, 10**digits)
    kind = "alpha" if name == "alpha" else "beta"
    j_cap = 1
    while tail_bound(j_cap) >= need / 16:
        j_cap += 1
    prec = (digits + 8) * 10 // 3 + 32
    for _ in range(8):
        s = series_sum(kind, j_cap).interval()
        sqrt_pi = sqrt_interval(pi_interval(prec), prec)
        quarters = 5 if name == "beta_prime" else 6  # 2**(5/4) or 2**(3/2)
        out = s * (pow2_quarters(quarters, prec) / sqrt_pi)
        if out.abs_error < need:
            return out
        prec *= 2
        j_cap += 2
    raise ArithmeticError(f"failed to certify {name} to {digits} digits")


def alpha_beta_gap(digits: int = 10) -> BoundedReal:
    """The difference alpha - beta_prime, the spread between the even-n and
    odd-n constants; around 7.4e-7, certifiable inside (7e-7, 8e-7)."""
    a = constant("alpha", digits + 2)
    bp = constant("beta_prime", digits + 2)
    return a - bp


def asymptotic_estimate(n: int, digits: int = 12) -> BoundedReal:
    """The predicted class total c(parity) * 2**(n(n+4)/4) / n**1.5.

    The result's relative half-width (abs_error / value) is certified below
    10**-digits; the absolute value is astronomically large for big n, so
    render it with bounded.sci_string rather than float.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if digits < 1:
        raise ValueError("digits must be at least 1")
    name = "alpha" if n % 2 == 0 else "beta_prime"
    prec = (digits + 12) * 10 // 3 + 32
    for _ in range(8):
        c = constant(name, digits + 6)
        growth = pow2_quarters(n * (n + 4), prec)
        n_three_halves = sqrt_interval(n**3, prec)
        est = (c * growth) / n_three_halves
        if est.abs_error / est.value < Fraction(1, 10**digits):
            return est
        prec *= 2
    raise ArithmeticError(f"failed to certify the estimate at n = {n}")


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    exact: int
    ratio: BoundedReal


def convergence_report(ns: Sequence[int], digits: int = 8) -> list[ConvergenceRow]:
    """Exact count over predicted count at each n, with certified enclosures.

    The ratios drift down toward 1 as n grows; the report makes the
    approach visible and checkable (each enclosure is rigorous, so strict
    inequalities between rows are machine-verified facts, not rounding)."""
    rows = []
    for n in ns:
        exact = unified_count(n)
        est = asymptotic_estimate(n, digits + 4)
        ratio = BoundedReal.exact(exact) / est
        rows.append(ConvergenceRow(n, exact, ratio))
    return rows
