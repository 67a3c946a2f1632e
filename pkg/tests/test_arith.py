from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from fatbounds.arith import (
    approx,
    ceil_rational,
    ceil_sqrt,
    floor_rational,
    format_rational,
    isqrt,
    pi_bounds,
    render_decimal,
    sqrt_bounds,
    sqrt_decompose,
)


@pytest.mark.parametrize("n, expected", [(0, 0), (90, 9), (10000, 100), (1, 1), (99, 9)])
def test_isqrt_examples(n, expected):
    assert isqrt(n) == expected


@pytest.mark.parametrize("n, expected", [(9, 3), (90, 10), (24, 5), (0, 0), (1, 1), (2, 2)])
def test_ceil_sqrt_examples(n, expected):
    assert ceil_sqrt(n) == expected


@pytest.mark.parametrize("n, st_", [(9, (3, 0)), (12, (3, 3)), (15, (3, 6)), (1, (1, 0))])
def test_sqrt_decompose_examples(n, st_):
    assert tuple(sqrt_decompose(n)) == st_


@pytest.mark.parametrize("q, expected", [(Fraction(24, 5), 5), (Fraction(3), 3), (Fraction(-7, 2), -3)])
def test_ceil_rational_examples(q, expected):
    assert ceil_rational(q) == expected


def test_negative_inputs_rejected():
    with pytest.raises(ValueError):
        isqrt(-1)
    with pytest.raises(ValueError):
        sqrt_decompose(0)


def test_isqrt_exhaustive_to_a_million():
    # walk the squares rather than calling a second sqrt
    s = 0
    for n in range(10**6 + 1):
        if (s + 1) * (s + 1) <= n:
            s += 1
        assert isqrt(n) == s


def test_decompose_and_ceil_sqrt_exhaustive():
    for n in range(1, 10**6 + 1, 7):
        s, t = sqrt_decompose(n)
        assert s * s + t == n and 0 <= t <= 2 * s
        c = ceil_sqrt(n)
        assert c * c >= n > (c - 1) * (c - 1)


@given(st.integers(min_value=0, max_value=10**60))
def test_isqrt_huge(n):
    s = isqrt(n)
    assert s * s <= n < (s + 1) ** 2


@given(st.integers(-(10**30), 10**30), st.integers(1, 10**20))
def test_ceil_rational_bracket(p, q):
    c = ceil_rational(Fraction(p, q))
    assert c * q >= p > (c - 1) * q
    f = floor_rational(Fraction(p, q))
    assert f * q <= p < (f + 1) * q


@given(st.fractions(min_value=0, max_value=10**6), st.integers(0, 30))
def test_sqrt_bounds_bracket(x, digits):
    lo, hi = sqrt_bounds(x, digits)
    assert lo * lo <= x <= hi * hi
    assert hi - lo <= Fraction(1, 10**digits)


def test_pi_bounds_against_mpmath():
    with mpmath.workdps(80):
        pi = mpmath.mpf(mpmath.pi)
        for digits in (3, 12, 40):
            lo, hi = pi_bounds(digits)
            assert mpmath.mpf(lo.numerator) / lo.denominator <= pi <= mpmath.mpf(hi.numerator) / hi.denominator
            assert hi - lo < Fraction(1, 10**digits)


def test_render_decimal_modes():
    x = Fraction(29406342516, 10**10)
    assert render_decimal(x, x, 3, "up") == "2.941"
    assert render_decimal(x, x, 3, "down") == "2.940"
    assert render_decimal(x, x, 3, "nearest") == "2.941"
    y = Fraction(-1, 6)
    assert render_decimal(y, y, 3, "up") == "-0.166"
    assert render_decimal(y, y, 3, "down") == "-0.167"
    assert render_decimal(Fraction(7), Fraction(7), 0) == "7"
    with pytest.raises(ValueError):
        render_decimal(x, x, 3, "sideways")


def test_rational_formatting():
    assert format_rational(Fraction(24, 7)) == "24/7"
    assert format_rational(Fraction(6, 2)) == "3"
    assert approx(Fraction(24, 7), 6) == "3.428571"
    assert approx(Fraction(-1, 8), 2) == "-0.12"
