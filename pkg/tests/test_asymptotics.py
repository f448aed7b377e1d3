from fractions import Fraction

import mpmath
import pytest

from f2cholesky.asymptotics import (
    ConvergenceRow,
    alpha_beta_gap,
    asymptotic_estimate,
    constant,
    convergence_report,
    series_sum,
    tail_bound,
)
from f2cholesky.bounded import pow2_quarters
from f2cholesky.counting import unified_count

# 40 digits, frozen from a high-precision run and cross-checked against an
# independent evaluation below
ALPHA_40 = Fraction("0.2833292446958502065826659226309027634439")
BETA_40 = Fraction("0.3369362710818762975136608853718317528419")


def test_series_hand_values():
    s = series_sum("alpha", 2)
    assert s.value == Fraction(3, 16)
    assert series_sum("beta", 2).value == Fraction(1, 4)
    assert series_sum("alpha", 1).value == 1
    assert series_sum("beta", 1).value == 2


def test_series_validation():
    with pytest.raises(ValueError):
        series_sum("alpha", 0)
    with pytest.raises(ValueError):
        series_sum("gamma", 2)
    with pytest.raises(ValueError):
        tail_bound(0)


def test_series_intervals_nest():
    for kind in ("alpha", "beta"):
        intervals = [series_sum(kind, j).interval() for j in range(1, 7)]
        for outer, inner in zip(intervals, intervals[1:]):
            assert outer.encloses(inner)
            assert inner.abs_error < outer.abs_error


def test_constants_match_frozen_digits():
    a = constant("alpha", 38)
    assert abs(a.value - ALPHA_40) <= a.abs_error + Fraction(2, 10**40)
    b = constant("beta", 38)
    assert abs(b.value - BETA_40) <= b.abs_error + Fraction(2, 10**40)


def test_constants_digit_anchors():
    a = constant("alpha", 12)
    assert a.abs_error < Fraction(1, 10**12)
    assert abs(a.value - Fraction("0.28332924469")) < Fraction(1, 10**11)
    b = constant("beta", 10)
    assert abs(b.value - Fraction("0.336936271")) < Fraction(1, 10**9)


def test_constants_against_independent_evaluation():
    mpmath.mp.dps = 50
    theta_a = mpmath.nsum(lambda j: (6 * j + 1) * mpmath.mpf(2) ** (-3 * j * j - j),
                          [-mpmath.inf, mpmath.inf])
    mp_alpha = 2 * mpmath.sqrt(2) / mpmath.sqrt(mpmath.pi) * theta_a
    a = constant("alpha", 40)
    assert abs(a.value - Fraction(mpmath.nstr(mp_alpha, 45))) < a.abs_error + Fraction(1, 10**42)

    theta_b = mpmath.nsum(lambda j: (6 * j + 2) * mpmath.mpf(2) ** (-3 * j * j - 2 * j),
                          [-mpmath.inf, mpmath.inf])
    mp_beta = 2 * mpmath.sqrt(2) / mpmath.sqrt(mpmath.pi) * theta_b
    b = constant("beta", 40)
    assert abs(b.value - Fraction(mpmath.nstr(mp_beta, 45))) < b.abs_error + Fraction(1, 10**42)


def test_beta_prime_quarter_power_tie():
    bp = constant("beta_prime", 32)
    b = constant("beta", 32)
    diff = bp - b * pow2_quarters(-1, 140)
    assert abs(diff.value) <= diff.abs_error + Fraction(1, 10**30)


def test_constant_precision_is_certified():
    for name, digits in (("alpha", 6), ("beta", 20), ("beta_prime", 15)):
        c = constant(name, digits)
        assert c.abs_error < Fraction(1, 10**digits)


def test_constant_validation():
    with pytest.raises(ValueError):
        constant("delta", 10)
    with pytest.raises(ValueError):
        constant("alpha", 0)


def test_gap_bracket():
    gap = alpha_beta_gap(12)
    assert gap.strictly_inside(Fraction(7, 10**7), Fraction(8, 10**7))
    # the even-n constant certifiably exceeds the odd-n one
    a = constant("alpha", 14)
    bp = constant("beta_prime", 14)
    assert a.lo > bp.hi


def test_estimate_small_case():
    # at n = 4 the prediction is alpha * 2**8 / 8 = 32 * alpha
    est = asymptotic_estimate(4, 14)
    a = constant("alpha", 16)
    assert abs(est.value - 32 * a.value) <= est.abs_error + 32 * a.abs_error
    assert est.abs_error / est.value < Fraction(1, 10**14)
    ratio = Fraction(unified_count(4)) / est.value
    assert abs(ratio - Fraction("3.088")) < Fraction(1, 100)


def test_estimate_validation():
    with pytest.raises(ValueError):
        asymptotic_estimate(0)
    with pytest.raises(ValueError):
        asymptotic_estimate(5, 0)


def test_estimate_huge_sizes_stay_rational():
    est = asymptotic_estimate(251, 10)
    assert est.value > 0
    assert est.abs_error / est.value < Fraction(1, 10**10)


def test_convergence_report_rows():
    # the ratio bumps up once between n = 4 and n = 6, then drifts down
    rows = convergence_report([8, 10, 14, 50], digits=8)
    assert [r.n for r in rows] == [8, 10, 14, 50]
    assert all(isinstance(r, ConvergenceRow) for r in rows)
    for r in rows:
        assert r.exact == unified_count(r.n)
        assert 1 < r.ratio.value < 4
    values = [r.ratio for r in rows]
    for a, b in zip(values, values[1:]):
        assert a.lo > b.hi  # strictly decreasing with certified margins
        assert b.lo > 1


def test_convergence_odd_sizes():
    # odd n exercises the odd-parity constant: ratios must still head to 1,
    # which pins its normalization (off by 2**(1/4) they would approach
    # 0.84 or 1.19 instead)
    rows = convergence_report([99, 199, 999], digits=8)
    for a, b in zip(rows, rows[1:]):
        assert a.ratio.lo > b.ratio.hi
    assert rows[-1].ratio.lo > 1
    assert rows[-1].ratio.hi < Fraction(103, 100)
