from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from f2cholesky.bounded import (
    BoundedReal,
    format_fraction,
    pi_bounds,
    pi_interval,
    pow2_quarters,
    sci_string,
    sqrt_bounds,
    sqrt_interval,
)

small_fractions = st.fractions(
    min_value=Fraction(-100), max_value=Fraction(100), max_denominator=64
)
small_errors = st.fractions(
    min_value=Fraction(0), max_value=Fraction(5), max_denominator=64
)
unit_fractions = st.fractions(
    min_value=Fraction(0), max_value=Fraction(1), max_denominator=64
)


@st.composite
def interval_with_point(draw):
    x = BoundedReal(draw(small_fractions), draw(small_errors))
    t = draw(unit_fractions)
    return x, x.lo + t * (x.hi - x.lo)


def test_construction_and_endpoints():
    x = BoundedReal(Fraction(1, 2), Fraction(1, 4))
    assert x.lo == Fraction(1, 4) and x.hi == Fraction(3, 4)
    assert x.contains(Fraction(1, 2)) and not x.contains(1)
    assert x.strictly_inside(0, 1) and not x.strictly_inside(Fraction(1, 4), 1)
    assert BoundedReal.from_endpoints(1, 3) == BoundedReal(Fraction(2), Fraction(1))
    assert BoundedReal.exact(7).abs_error == 0
    with pytest.raises(ValueError):
        BoundedReal(Fraction(0), Fraction(-1))
    with pytest.raises(ValueError):
        BoundedReal.from_endpoints(2, 1)


@given(interval_with_point(), interval_with_point())
def test_arithmetic_preserves_containment(ap, bp):
    a, x = ap
    b, y = bp
    assert (a + b).contains(x + y)
    assert (a - b).contains(x - y)
    assert (a * b).contains(x * y)
    assert (-a).contains(-x)
    assert (a + 3).contains(x + 3)
    assert (a * Fraction(2, 3)).contains(x * Fraction(2, 3))
    assert a.abs_interval().contains(abs(x))


@given(interval_with_point(), interval_with_point())
def test_division_preserves_containment(ap, bp):
    a, x = ap
    b, y = bp
    shifted = b + 200  # force the divisor interval positive
    assert (a / shifted).contains(x / (y + 200))
    negated = -shifted
    assert (a / negated).contains(x / (-(y + 200)))


def test_division_by_zero_interval():
    with pytest.raises(ZeroDivisionError):
        BoundedReal.exact(1) / BoundedReal(Fraction(0), Fraction(1))
    with pytest.raises(ZeroDivisionError):
        BoundedReal.exact(1) / 0


def test_enclosure_relation():
    outer = BoundedReal.from_endpoints(0, 10)
    inner = BoundedReal.from_endpoints(2, 3)
    assert outer.encloses(inner) and not inner.encloses(outer)


def test_format_fraction():
    assert format_fraction(Fraction(1, 3), 4) == "0.3333"
    assert format_fraction(Fraction(-1, 3), 4) == "-0.3333"
    assert format_fraction(Fraction(5), 0) == "5"
    assert format_fraction(Fraction(2, 3), 2) == "0.67"
    assert format_fraction(Fraction(1, 8), 3) == "0.125"
    with pytest.raises(ValueError):
        format_fraction(Fraction(1), -1)


def test_sci_string():
    assert sci_string(Fraction(1024), 4) == "1.024e+3"
    assert sci_string(Fraction(1, 1000), 1) == "1e-3"
    assert sci_string(Fraction(-3, 2), 2) == "-1.5e+0"
    assert sci_string(Fraction(999, 1000), 2) == "1.0e+0"  # rounding carries over
    assert sci_string(Fraction(0), 5) == "0e+0"
    huge = sci_string(Fraction(2**1000), 3)
    assert huge == "1.07e+301"
    with pytest.raises(ValueError):
        sci_string(Fraction(1), 0)


@given(st.fractions(min_value=Fraction(1, 10**6), max_value=Fraction(10**6),
                    max_denominator=10**6), st.integers(1, 12))
def test_sci_string_value_roundtrip(x, sig):
    body, exp = sci_string(x, sig).split("e")
    approx = Fraction(body) * 10 ** int(exp)
    assert abs(approx - x) <= Fraction(10) ** (int(exp) - sig + 1) / 2


def test_pi_enclosure():
    lo, hi = pi_bounds(128)
    assert hi - lo < Fraction(1, 2**120)
    mpmath.mp.dps = 60
    mp_pi = Fraction(mpmath.nstr(mpmath.pi, 50, strip_zeros=False))
    assert lo - Fraction(1, 10**45) <= mp_pi <= hi + Fraction(1, 10**45)
    assert pi_interval(64).contains(Fraction(355, 113)) is False  # pi != 355/113
    assert pi_interval(64).contains(Fraction(3))  is False


def test_sqrt_enclosures():
    lo, hi = sqrt_bounds(2, 100)
    assert lo * lo <= 2 <= hi * hi
    assert hi - lo <= Fraction(1, 2**99)
    assert sqrt_bounds(0, 10) == (0, 0)
    x = sqrt_interval(BoundedReal.from_endpoints(4, 9), 80)
    assert x.lo <= 2 and x.hi >= 3
    with pytest.raises(ValueError):
        sqrt_bounds(-1, 10)
    with pytest.raises(ValueError):
        sqrt_interval(BoundedReal.from_endpoints(-1, 1), 10)


@given(st.integers(0, 10**6), st.integers(20, 120))
def test_sqrt_bounds_random(n, prec):
    lo, hi = sqrt_bounds(n, prec)
    assert lo * lo <= n <= hi * hi
    assert hi - lo <= Fraction(2, 2**prec) * max(1, hi)


def test_pow2_quarters():
    assert pow2_quarters(8, 50) == BoundedReal.exact(4)
    assert pow2_quarters(-4, 50) == BoundedReal.exact(Fraction(1, 2))
    mpmath.mp.dps = 40
    for q in (-5, -1, 1, 2, 3, 5, 6, 7):
        enclosure = pow2_quarters(q, 120)
        truth = Fraction(mpmath.nstr(mpmath.mpf(2) ** (Fraction(q, 4)), 30))
        assert enclosure.lo - Fraction(1, 10**25) <= truth <= enclosure.hi + Fraction(1, 10**25)
        assert enclosure.hi - enclosure.lo < Fraction(1, 2**100)
