"""Averaged (rational) unloading and Roé's constant r(n).

Starting from (1, ..., 1), the averaged routine i moves the first entry to
r_i(n) and the tail sum to s_i(n). The recurrence is::

    r_i = i^2 / (n - 1 + i^2) * (r_{i-1} + s_{i-1} / i)
    s_i = (n - 1) / i * r_i

and r(n) = r_{n-1}(n). The sorting step of the integer procedure does
nothing here and is skipped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import pi_bounds, render_decimal, sqrt_bounds
from .bounds import lambda_

DEFAULT_MAX_N = 5000


@dataclass(frozen=True)
class AveragedState:
    i: int
    r: Fraction
    s: Fraction

    @classmethod
    def initial(cls, n: int, scale: int = 1) -> "AveragedState":
        return cls(1, Fraction(scale), Fraction((n - 1) * scale))


def _check_n(n: int, max_n: int) -> None:
    if n < 3:
        raise ValueError(f"r(n) is defined for n >= 3, got {n}")
    if n > max_n:
        raise ValueError(f"n={n} exceeds max_n={max_n}; pass max_n explicitly to go further")


def averaged_step(state: AveragedState, n: int) -> AveragedState:
    i = state.i + 1
    if not 2 <= i <= n - 1:
        raise ValueError(f"no averaged routine {i} for n={n}")
    k = n - 1
    r = Fraction(i * i, k + i * i) * (state.r + state.s / i)
    return AveragedState(i, r, Fraction(k, i) * r)


def averaged_states(n: int, max_n: int = DEFAULT_MAX_N) -> list[AveragedState]:
    _check_n(n, max_n)
    states = [AveragedState.initial(n)]
    for _ in range(2, n):
        states.append(averaged_step(states[-1], n))
    return states


def roe_r(n: int, max_n: int = DEFAULT_MAX_N) -> Fraction:
    """r(n) by the averaged recurrence."""
    return averaged_states(n, max_n)[-1].r


def roe_r_product(n: int, max_n: int = DEFAULT_MAX_N) -> Fraction:
    """r(n) = (n-1) * prod_{i=2}^{n-1} (1 - i/(n-1+i^2))."""
    _check_n(n, max_n)
    k = n - 1
    value = Fraction(k)
    for i in range(2, n):
        value *= Fraction(k + i * i - i, k + i * i)
    return value


def analytic_bound_interval(n: int, digits: int) -> tuple[Fraction, Fraction]:
    """Bracket for sqrt(n-1) - pi/8 + 1/sqrt(n-1)."""
    if n < 3:
        raise ValueError(f"analytic bound is stated for n >= 3, got {n}")
    prec = digits + 10
    root_lo, root_hi = sqrt_bounds(n - 1, prec)
    pi_lo, pi_hi = pi_bounds(prec)
    return root_lo - pi_hi / 8 + 1 / root_hi, root_hi - pi_lo / 8 + 1 / root_lo


def roe_upper_bound_analytic(n: int, digits: int = 12, rounding: str = "up") -> str:
    """sqrt(n-1) - pi/8 + 1/sqrt(n-1) as a decimal string.

    The default rounds toward +inf, so the string is itself a valid upper
    bound for r(n).
    """
    lo, hi = analytic_bound_interval(n, digits)
    return render_decimal(lo, hi, digits, rounding)


def compare_lambda_r(n: int) -> Fraction:
    """lambda_n - r(n), which must be positive for every n >= 3."""
    gap = lambda_(n) - roe_r(n)
    if gap <= 0:
        raise AssertionError(f"lambda_{n} - r({n}) = {gap} is not positive")
    return gap
