"""Closed-form lower bounds on d(m, n).

d(m, n) is the least degree of a plane curve having multiplicity at least
``m`` at each of ``n`` general points. Everything here is a pure function of
integers returning ints or Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .arith import (
    ceil_rational,
    ceil_sqrt,
    isqrt,
    render_decimal,
    sqrt_bounds,
)

# d(m, n) = ceil(c_n * m) for n <= 9
SMALL_N_CONSTANTS: dict[int, Fraction] = {
    1: Fraction(1),
    2: Fraction(1),
    3: Fraction(3, 2),
    4: Fraction(2),
    5: Fraction(2),
    6: Fraction(12, 5),
    7: Fraction(21, 8),
    8: Fraction(48, 17),
    9: Fraction(3),
}


class InvalidCertificate(ValueError):
    """A (d, r) pair or other witness fails the hypotheses it must satisfy."""


@dataclass(frozen=True)
class DrPair:
    d: int
    r: int

    def certifies(self, n: int) -> bool:
        return self.d >= 1 and self.r >= 1 and self.r * self.r >= n * self.d * self.d and self.r <= n

    def value(self, n: int) -> Fraction:
        return Fraction(n * self.d, self.r)


def _require_positive(**kwargs: int) -> None:
    for name, v in kwargs.items():
        if v < 1:
            raise ValueError(f"{name} must be a positive integer, got {v}")


def lambda_pair(n: int) -> DrPair:
    """The pair d = floor(sqrt n), r = ceil(d sqrt n) behind lambda_n."""
    _require_positive(n=n)
    s = isqrt(n)
    return DrPair(s, ceil_sqrt(n * s * s))


def lambda_(n: int) -> Fraction:
    """lambda_n = n*floor(sqrt n) / ceil(sqrt(n) * floor(sqrt n)), exactly."""
    return lambda_pair(n).value(n)


def lambda_bound(m: int, n: int) -> int:
    _require_positive(m=m, n=n)
    return ceil_rational(m * lambda_(n))


def easy_bound_floor(m: int, n: int) -> int:
    _require_positive(m=m, n=n)
    return m * isqrt(n)


def easy_bound_ratio(m: int, n: int) -> tuple[Fraction, int]:
    _require_positive(m=m, n=n)
    value = Fraction(m * n, ceil_sqrt(n))
    return value, ceil_rational(value)


def small_n_exact(m: int, n: int) -> int:
    _require_positive(m=m, n=n)
    if n not in SMALL_N_CONSTANTS:
        raise ValueError(f"exact value of d(m, n) is only tabulated for n <= 9, got n={n}")
    return ceil_rational(m * SMALL_N_CONSTANTS[n])


def general_bound(m: int, n: int, pair: DrPair) -> int:
    """ceil(m*n*d/r) for any pair with (r/d)^2 >= n and r <= n."""
    _require_positive(m=m, n=n)
    if pair.d < 1 or pair.r < 1:
        raise InvalidCertificate(f"{pair}: d and r must be positive")
    if pair.r * pair.r < n * pair.d * pair.d:
        raise InvalidCertificate(f"{pair}: r^2 = {pair.r ** 2} < n*d^2 = {n * pair.d ** 2}")
    if pair.r > n:
        raise InvalidCertificate(f"{pair}: r = {pair.r} exceeds n = {n}")
    return ceil_rational(m * pair.value(n))


def optimize_dr(n: int) -> tuple[DrPair, Fraction]:
    """Best (d, r) for the general bound; ties go to the smallest d.

    For a fixed d the best admissible r is ceil(d sqrt n), and d sqrt n <= r <= n
    forces d <= floor(sqrt n), so the search is over d alone.
    """
    _require_positive(n=n)
    best: Optional[tuple[DrPair, Fraction]] = None
    for d in range(1, isqrt(n) + 1):
        pair = DrPair(d, ceil_sqrt(n * d * d))
        if pair.r > n:
            continue
        value = pair.value(n)
        if best is None or value > best[1]:
            best = (pair, value)
    assert best is not None  # d = 1 always works: ceil(sqrt n) <= n
    return best


def nagata_holds(d: int, m: int, n: int) -> bool:
    """d > m*sqrt(n), decided as d^2 > m^2 n."""
    if min(d, m, n) < 0:
        raise ValueError("nagata_holds takes nonnegative integers")
    return d * d > m * m * n


def _closed_form_limits(s: int) -> tuple[Fraction, Fraction]:
    """Strict upper limits on m (even, odd) for the n = s^2 + s closed forms."""
    if s % 2 == 0:
        return Fraction(4 * s + 2), Fraction(2 * s)
    return (
        Fraction(4 * s * s + 2 * s + 2, 3 * s + 1),
        Fraction(2 * s * s + s + 1, 3 * s + 1),
    )


def closed_form_valid(m: int, s: int) -> bool:
    if s < 1 or m < 1:
        return False
    even_limit, odd_limit = _closed_form_limits(s)
    return m < (even_limit if m % 2 == 0 else odd_limit)


def lambda_closed_form(m: int, s: int) -> int:
    """ceil(m * lambda_n) for n = s^2 + s, on the range where it is proven."""
    if not closed_form_valid(m, s):
        raise ValueError(f"closed form for n = s^2 + s not established at m={m}, s={s}")
    if m % 2 == 0:
        return m * s + m // 2
    return m * s + (m + 1) // 2


def nagata_range_check(s: int, m: int) -> bool:
    """Whether (s, m) lies in the range where ceil(m lambda_n) beats m sqrt(n), n = s^2+s."""
    if s < 3:
        raise ValueError(f"nagata_range_check needs s >= 3, got {s}")
    if m < 1:
        return False
    if s % 2 == 0:
        return m < 2 * s
    return 3 * m < 2 * s


def xu_interval(m: int, n: int, digits: int) -> tuple[Fraction, Fraction]:
    """Bracket for m*sqrt(n) - 1/(2 sqrt(n-1))."""
    if n < 2:
        raise ValueError(f"Xu's threshold needs n >= 2, got {n}")
    prec = digits + 10
    a_lo, a_hi = sqrt_bounds(m * m * n, prec)
    b_lo, b_hi = sqrt_bounds(n - 1, prec)
    return a_lo - 1 / (2 * b_lo), a_hi - 1 / (2 * b_hi)


def xu_threshold(m: int, n: int, digits: int = 6) -> str:
    """Decimal rendering of m*sqrt(n) - 1/(2 sqrt(n-1)), rounded to nearest.

    Applies to reduced irreducible curves only, so it is informational with
    respect to d(m, n).
    """
    lo, hi = xu_interval(m, n, digits)
    return render_decimal(lo, hi, digits, "nearest")


@dataclass
class BoundReport:
    m: int
    n: int
    easy_floor: int
    easy_ratio: Fraction
    easy_ratio_bound: int
    lambda_value: Fraction
    lambda_bound: int
    general_pair: DrPair
    general_value: Fraction
    general_bound: int
    roe_R: Optional[int]
    roe_r: Optional[Fraction]
    averaged_bound: Optional[int]
    exact_small_n: Optional[int]
    xu_threshold: str
    best: int = 0
    best_source: str = ""
    nagata_holds_at_best: bool = False
    integer_bounds: dict[str, int] = field(default_factory=dict)


def bound_report(m: int, n: int, digits: int = 6) -> BoundReport:
    """Every lower bound on d(m, n) this package knows, and the best of them."""
    from .averaged import roe_r
    from .unloading import roe_R_block

    _require_positive(m=m, n=n)
    ratio, ratio_bound = easy_bound_ratio(m, n)
    pair, gvalue = optimize_dr(n)
    R = roe_R_block(m, n)[0] if n >= 3 else None
    r = roe_r(n) if n >= 3 else None
    report = BoundReport(
        m=m,
        n=n,
        easy_floor=easy_bound_floor(m, n),
        easy_ratio=ratio,
        easy_ratio_bound=ratio_bound,
        lambda_value=lambda_(n),
        lambda_bound=lambda_bound(m, n),
        general_pair=pair,
        general_value=gvalue,
        general_bound=general_bound(m, n, pair),
        roe_R=R,
        roe_r=r,
        averaged_bound=ceil_rational(m * r) if r is not None else None,
        exact_small_n=small_n_exact(m, n) if n <= 9 else None,
        xu_threshold=xu_threshold(m, n, digits) if n >= 2 else "",
    )
    # order matters for ties: the first listed source wins
    candidates = {
        "exact small-n": report.exact_small_n,
        "lambda": report.lambda_bound,
        "general (d,r)": report.general_bound,
        "roe unloading": report.roe_R,
        "roe averaged": report.averaged_bound,
        "easy ratio": report.easy_ratio_bound,
        "easy floor": report.easy_floor,
    }
    report.integer_bounds = {k: v for k, v in candidates.items() if v is not None}
    report.best_source, report.best = max(report.integer_bounds.items(), key=lambda kv: kv[1])
    report.nagata_holds_at_best = nagata_holds(report.best, m, n)
    return report
