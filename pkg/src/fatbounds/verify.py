"""Invariant suites behind ``fatbounds verify``.

Each check walks a range of inputs and stops at the first counterexample.
The ``full`` suite uses the ranges of the acceptance tests; ``fast`` trims
them to run in a few seconds.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Optional

from . import averaged, bounds, lattice, unloading
from .arith import ceil_rational, ceil_sqrt, isqrt, sqrt_decompose

SUITES = ("fast", "full")


@dataclass
class CheckResult:
    name: str
    cases: int
    counterexample: Optional[str]
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.counterexample is None


# A check yields one string per case: "" when it passes, a description otherwise.
Check = Callable[[str], Iterator[str]]


def _small_n(suite: str) -> Iterator[str]:
    for n in range(1, 10):
        for m in range(1, 51):
            exact = bounds.small_n_exact(m, n)
            if exact != ceil_rational(m * bounds.SMALL_N_CONSTANTS[n]):
                yield f"small_n_exact({m},{n}) = {exact}"
            elif bounds.lambda_bound(m, n) > exact:
                yield f"lambda_bound({m},{n}) = {bounds.lambda_bound(m, n)} > {exact}"
            else:
                yield ""


def _square_observation(suite: str) -> Iterator[str]:
    top = 100 if suite == "full" else 30
    for m in range(2, top + 1):
        R = unloading.roe_R_block(m, m * m)[0]
        ok = abs(R - (m * m + Fraction(m, 10))) <= 1
        yield "" if ok else f"R({m},{m * m}) = {R}, m^2 + m/10 = {m * m + Fraction(m, 10)}"


def _engines(suite: str) -> Iterator[str]:
    pairs = [(m, n) for n in range(3, 26) for m in range(1, 16)]
    rng = random.Random(20260101)
    extra, nmax = (200, 200) if suite == "full" else (20, 80)
    pairs += [(rng.randint(1, 50), rng.randint(3, nmax)) for _ in range(extra)]
    for m, n in pairs:
        a = unloading.roe_R_naive(m, n)[0]
        b = unloading.roe_R_block(m, n)[0]
        yield "" if a == b else f"naive R({m},{n}) = {a} but block gives {b}"


def _comparison(suite: str) -> Iterator[str]:
    top = 100000 if suite == "full" else 5000
    for n in range(1, top + 1):
        s, t = sqrt_decompose(n)
        lam = bounds.lambda_(n)
        ratio = Fraction(n, ceil_sqrt(n))
        if lam < s or (lam == s) != (t in (0, 1)):
            yield f"n={n}: lambda={lam} vs floor sqrt={s} (t={t})"
        elif lam < ratio or (lam == ratio) != (t in (0, 2 * s - 1, 2 * s)):
            yield f"n={n}: lambda={lam} vs n/ceil sqrt={ratio} (t={t}, s={s})"
        else:
            yield ""


def _lambda_vs_r(suite: str) -> Iterator[str]:
    top = 300 if suite == "full" else 80
    for n in range(3, top + 1):
        r = averaged.roe_r(n)
        if r != averaged.roe_r_product(n):
            yield f"recurrence and product disagree at n={n}"
        elif bounds.lambda_(n) - r <= 0:
            yield f"lambda_{n} - r({n}) = {bounds.lambda_(n) - r}"
        else:
            yield ""


def _R_upper(suite: str) -> Iterator[str]:
    ntop = 60 if suite == "full" else 25
    for n in range(3, ntop + 1):
        r = averaged.roe_r(n)
        for m in range(1, 21):
            R = unloading.roe_R_block(m, n)[0]
            rhs = m * r + 2 * (n - 1)
            yield "" if R <= rhs else f"R({m},{n}) = {R} > {rhs}"


def _r_analytic(suite: str) -> Iterator[str]:
    top = 500 if suite == "full" else 100
    for n in range(3, top + 1):
        rhs = Fraction(averaged.roe_upper_bound_analytic(n, 12))
        r = averaged.roe_r(n)
        yield "" if r <= rhs else f"r({n}) = {float(r)} > {rhs}"


def _closed_forms(suite: str) -> Iterator[str]:
    top = 40 if suite == "full" else 15
    for s in range(1, top + 1):
        n = s * s + s
        for m in range(1, 4 * s + 3):
            if not bounds.closed_form_valid(m, s):
                continue
            direct = ceil_rational(m * Fraction(n * s, ceil_sqrt(n * s * s)))
            closed = bounds.lambda_closed_form(m, s)
            yield "" if direct == closed else f"s={s}, m={m}: closed form {closed} != {direct}"


def _nagata_range(suite: str) -> Iterator[str]:
    top = 30 if suite == "full" else 12
    for s in range(3, top + 1):
        n = s * s + s
        for m in range(1, 2 * s):
            if bounds.nagata_range_check(s, m):
                b = bounds.lambda_bound(m, n)
                yield "" if b * b > m * m * n else f"s={s}, m={m}: bound {b} does not beat m sqrt n"


def _lattice(suite: str) -> Iterator[str]:
    top = 400 if suite == "full" else 100
    for n in range(2, top + 1):
        d = isqrt(n)
        r = ceil_sqrt(n * d * d)
        try:
            report = lattice.nef_certificate(n, d, r)
        except lattice.CertificateError as exc:
            yield f"n={n}: {exc}"
            continue
        bad = [m for m in (1, 2, 7) if report.bound(m) != bounds.lambda_bound(m, n)]
        yield "" if not bad else f"n={n}: certificate bound differs from lambda bound at m={bad}"


def _divergence(suite: str) -> Iterator[str]:
    ns = (10, 20, 50) if suite == "full" else (10, 20)
    for n in ns:
        lam = bounds.lambda_(n)
        gaps = [m * lam - unloading.roe_R_block(m, n)[0] for m in (10, 100, 1000)]
        ok = all(a < b for a, b in zip(gaps, gaps[1:]))
        yield "" if ok else f"n={n}: m*lambda - R = {[str(g) for g in gaps]} not increasing"


CHECKS: dict[str, Check] = {
    "small-n exactness": _small_n,
    "R(m,m^2) observation": _square_observation,
    "engine equivalence": _engines,
    "lambda vs easy bounds": _comparison,
    "lambda > r(n)": _lambda_vs_r,
    "R <= m r(n) + 2(n-1)": _R_upper,
    "r(n) analytic bound": _r_analytic,
    "closed forms n=s^2+s": _closed_forms,
    "Nagata range": _nagata_range,
    "lattice certificates": _lattice,
    "divergence proxy": _divergence,
}


def run_check(name: str, suite: str) -> CheckResult:
    start = time.perf_counter()
    cases = 0
    for outcome in CHECKS[name](suite):
        cases += 1
        if outcome:
            return CheckResult(name, cases, outcome, time.perf_counter() - start)
    return CheckResult(name, cases, None, time.perf_counter() - start)


def run_suite(suite: str) -> list[CheckResult]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    return [run_check(name, suite) for name in CHECKS]
