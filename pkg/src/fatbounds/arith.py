"""Exact integer and rational primitives.

Every quantity in the package is either a Python ``int`` or a
:class:`fractions.Fraction`; nothing here touches floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple, Union

ExactRational = Fraction
RationalLike = Union[int, Fraction]


class SqrtDecomposition(NamedTuple):
    """``n = s*s + t`` with ``s = isqrt(n)`` and ``0 <= t <= 2s``."""

    s: int
    t: int


def isqrt(n: int) -> int:
    if n < 0:
        raise ValueError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def ceil_sqrt(n: int) -> int:
    """Least integer whose square is at least ``n``."""
    s = isqrt(n)
    return s if s * s == n else s + 1


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def sqrt_decompose(n: int) -> SqrtDecomposition:
    if n < 1:
        raise ValueError(f"sqrt_decompose needs n >= 1, got {n}")
    s = isqrt(n)
    return SqrtDecomposition(s, n - s * s)


def ceil_rational(q: RationalLike) -> int:
    q = Fraction(q)
    return -((-q.numerator) // q.denominator)


def floor_rational(q: RationalLike) -> int:
    q = Fraction(q)
    return q.numerator // q.denominator


# --- directed decimal rendering -------------------------------------------

_GUARD = 10


def sqrt_bounds(x: RationalLike, digits: int) -> tuple[Fraction, Fraction]:
    """Rational ``lo <= sqrt(x) <= hi`` with ``hi - lo <= 10**-digits``."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("sqrt of negative rational")
    scale = 10**digits
    # sqrt(p/q) = sqrt(p*q) / q
    radicand = x.numerator * x.denominator * scale * scale
    den = x.denominator * scale
    return Fraction(isqrt(radicand), den), Fraction(ceil_sqrt(radicand), den)


def _arctan_inv_scaled(k: int, scale: int) -> tuple[int, int]:
    """Bounds on ``scale * arctan(1/k)`` from the alternating Taylor series.

    Each term is truncated toward zero, so the accumulated truncation error is
    at most one unit per term; the returned pair brackets the true value.
    """
    total = 0
    terms = 0
    power = scale // k
    k2 = k * k
    sign = 1
    j = 1
    while power:
        total += sign * (power // j)
        terms += 1
        power //= k2
        sign = -sign
        j += 2
    # tail after the last term is smaller than the first dropped term (< 1)
    return total - terms - 1, total + terms + 1


def pi_bounds(digits: int) -> tuple[Fraction, Fraction]:
    """Rational ``lo <= pi <= hi`` with width below ``10**-digits`` (Machin)."""
    scale = 10 ** (digits + _GUARD)
    a_lo, a_hi = _arctan_inv_scaled(5, scale)
    b_lo, b_hi = _arctan_inv_scaled(239, scale)
    lo = 16 * a_lo - 4 * b_hi
    hi = 16 * a_hi - 4 * b_lo
    return Fraction(lo, scale), Fraction(hi, scale)


def render_decimal(lo: Fraction, hi: Fraction, digits: int, rounding: str = "nearest") -> str:
    """Format a value known to lie in ``[lo, hi]`` with ``digits`` decimals.

    ``rounding="up"`` rounds ``hi`` toward +inf and ``"down"`` rounds ``lo``
    toward -inf, so both are sound one-sided bounds. ``"nearest"`` rounds the
    midpoint; the caller supplies an interval much narrower than the last digit.
    """
    scale = 10**digits
    if rounding == "up":
        units = ceil_rational(hi * scale)
    elif rounding == "down":
        units = floor_rational(lo * scale)
    elif rounding == "nearest":
        units = round((lo + hi) / 2 * scale)
    else:
        raise ValueError(f"unknown rounding mode {rounding!r}")
    return format_scaled(units, digits)


def format_scaled(units: int, digits: int) -> str:
    sign = "-" if units < 0 else ""
    units = abs(units)
    if digits == 0:
        return f"{sign}{units}"
    whole, frac = divmod(units, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def approx(q: RationalLike, digits: int = 6) -> str:
    """Nearest decimal rendering of an exact rational."""
    q = Fraction(q)
    return render_decimal(q, q, digits, "nearest")


def format_rational(q: RationalLike) -> str:
    """``p/q`` text; integers print without a denominator."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
