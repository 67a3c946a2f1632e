"""Divisor classes on the plane blown up at n points, and nef certificates.

A class is an integer vector (a0; a1, ..., an) on the basis e0 (a line) and
e1..en (exceptional curves), with e0^2 = 1, ei^2 = -1 and all other products
zero. The certificates here check lattice arithmetic only; the geometry
(smoothness of the chosen curve, position of the points) is taken as given.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .arith import ceil_rational, ceil_sqrt, format_rational, isqrt


class CertificateError(ValueError):
    """A certificate identity or hypothesis failed; the message names it."""


@dataclass(frozen=True)
class DivisorClass:
    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coefficients) < 1:
            raise ValueError("a divisor class needs at least the e0 coefficient")

    @property
    def n(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def zero(cls, n: int) -> "DivisorClass":
        return cls((0,) * (n + 1))

    @classmethod
    def basis(cls, index: int, n: int) -> "DivisorClass":
        c = [0] * (n + 1)
        c[index] = 1
        return cls(tuple(c))

    def _check(self, other: "DivisorClass") -> None:
        if self.n != other.n:
            raise ValueError(f"classes live on different blow-ups (n={self.n} vs n={other.n})")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-1) * other

    def __rmul__(self, k: int) -> "DivisorClass":
        return DivisorClass(tuple(k * a for a in self.coefficients))

    def __neg__(self) -> "DivisorClass":
        return (-1) * self

    def dot(self, other: "DivisorClass") -> int:
        return intersect(self, other)

    def label(self) -> str:
        a0, *rest = self.coefficients
        return f"({a0}; " + ", ".join(map(str, rest)) + ")"


def intersect(A: DivisorClass, B: DivisorClass) -> int:
    A._check(B)
    a0, *a = A.coefficients
    b0, *b = B.coefficients
    return a0 * b0 - sum(x * y for x, y in zip(a, b))


def gram_matrix(n: int) -> list[list[int]]:
    return [[intersect(DivisorClass.basis(i, n), DivisorClass.basis(j, n)) for j in range(n + 1)] for i in range(n + 1)]


def class_C(d: int, r: int, n: int) -> DivisorClass:
    """Degree-d curve through the first r points: d e0 - (e1 + ... + er)."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    return DivisorClass((d,) + (-1,) * r + (0,) * (n - r))


def class_D(d: int, r: int, n: int) -> DivisorClass:
    """r d e0 - d^2 (e1 + ... + en)."""
    return DivisorClass((r * d,) + (-d * d,) * n)


def difference_class(j: int, n: int) -> DivisorClass:
    """e_j - e_{j+1}."""
    if not 1 <= j < n:
        raise ValueError(f"e_{j} - e_{j + 1} is not a class on the {n}-point blow-up")
    c = [0] * (n + 1)
    c[j], c[j + 1] = 1, -1
    return DivisorClass(tuple(c))


@dataclass
class DecompositionCertificate:
    """D = r*C + sum_j w_j (e_j - e_{j+1}) + beta*e_n with every weight >= 0.

    ``difference_weights[j-1]`` is the weight on e_j - e_{j+1} for
    j = 1, ..., n-1; the first min(r, n-1) of these come from the telescoping
    identity, the rest from the tail.
    """

    n: int
    d: int
    r: int
    c_weight: int
    telescope: list[int]
    tail: list[int]
    beta: int

    @property
    def difference_weights(self) -> list[int]:
        return self.telescope + self.tail

    def terms(self) -> list[tuple[str, int, DivisorClass]]:
        n = self.n
        out = [("C", self.c_weight, class_C(self.d, self.r, n))]
        for j, w in enumerate(self.difference_weights, start=1):
            out.append((f"e{j}-e{j + 1}", w, difference_class(j, n)))
        out.append((f"e{n}", self.beta, DivisorClass.basis(n, n)))
        return out

    def total(self) -> DivisorClass:
        acc = [0] * (self.n + 1)
        for _, w, cls in self.terms():
            for idx, a in enumerate(cls.coefficients):
                if a:
                    acc[idx] += w * a
        return DivisorClass(tuple(acc))

    def verify(self) -> None:
        for name, w, _ in self.terms():
            if w < 0:
                raise CertificateError(f"negative weight {w} on {name}")
        D = class_D(self.d, self.r, self.n)
        total = self.total()
        if total != D:
            raise CertificateError(f"weighted sum {total.label()} != D = {D.label()}")


def _check_hypotheses(n: int, d: int, r: int) -> None:
    if min(n, d, r) < 1:
        raise CertificateError(f"n, d, r must be positive (n={n}, d={d}, r={r})")
    if r * r < n * d * d:
        raise CertificateError(f"hypothesis r^2 >= n d^2 fails: {r * r} < {n * d * d}")
    if r > n:
        raise CertificateError(f"hypothesis r <= n fails: r={r}, n={n}")
    # d^2 <= r follows from the two above
    assert d * d <= r


def effective_decomposition(n: int, d: int, r: int) -> DecompositionCertificate:
    """An explicit nonnegative decomposition of D; verified before it is returned."""
    _check_hypotheses(n, d, r)
    excess = r - d * d
    if r < n:
        # r C + sum_{j<=r} excess*j (e_j - e_{j+1}) = rd e0 - d^2(e1..er) - M e_{r+1}
        M = r * r - r * d * d
        telescope = [excess * j for j in range(1, r + 1)]
        tail = [M - k * d * d for k in range(1, n - r)]
        beta = M - (n - r) * d * d
    else:
        # D - rC = excess * (e1 + ... + en) = excess * (sum_j j(e_j - e_{j+1}) + n e_n)
        telescope = [excess * j for j in range(1, n)]
        tail = []
        beta = excess * n
    cert = DecompositionCertificate(n, d, r, r, telescope, tail, beta)
    cert.verify()
    return cert


@dataclass
class CertificateReport:
    """Outcome of a nef-pairing argument, serializable for outside audit.

    The argument: a nef class N with N . (d e0 - m(e1 + ... + en)) >= 0
    gives ``degree_coefficient * d >= multiplicity_coefficient * m``.
    """

    kind: str
    n: int
    nef_class: DivisorClass
    degree_coefficient: int
    multiplicity_coefficient: int
    generators: list[dict] = field(default_factory=list)
    checks: list[dict] = field(default_factory=list)
    params: dict = field(default_factory=dict)

    @property
    def ratio(self) -> Fraction:
        """d(m, n) >= ratio * m."""
        return Fraction(self.multiplicity_coefficient, self.degree_coefficient)

    def bound(self, m: int) -> int:
        return ceil_rational(m * self.ratio)

    def statement(self) -> str:
        return f"d(m,{self.n}) >= ceil({self.multiplicity_coefficient}*m/{self.degree_coefficient})"

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "kind": self.kind,
            "n": self.n,
            **self.params,
            "nef_class": list(self.nef_class.coefficients),
            "self_intersection": intersect(self.nef_class, self.nef_class),
            "generators": self.generators,
            "checks": self.checks,
            "pairing": {
                "degree_coefficient": self.degree_coefficient,
                "multiplicity_coefficient": self.multiplicity_coefficient,
            },
            "bound_ratio": format_rational(self.ratio),
            "statement": self.statement(),
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def _uniform_class(degree: int, m: int, points: int, n: int) -> DivisorClass:
    return DivisorClass((degree,) + (-m,) * points + (0,) * (n - points))


def nef_certificate(n: int, d: int, r: int) -> CertificateReport:
    """Check that D = rd e0 - d^2 sum(e_i) is nef and derive d(m,n) >= mnd/r."""
    cert = effective_decomposition(n, d, r)
    D = class_D(d, r, n)
    checks: list[dict] = []

    def record(name: str, value: int, ok: bool) -> None:
        checks.append({"identity": name, "value": value, "ok": ok})
        if not ok:
            raise CertificateError(f"{name} failed (value {value})")

    C = class_C(d, r, n)
    record("D.C = 0", intersect(D, C), intersect(D, C) == 0)
    for j in range(1, n):
        v = intersect(D, difference_class(j, n))
        record(f"D.(e{j}-e{j + 1}) = 0", v, v == 0)
    en = intersect(D, DivisorClass.basis(n, n))
    record(f"D.e{n} >= 0", en, en >= 0)

    generators = [
        {"name": name, "weight": w, "class": list(cls.coefficients), "pairing_with_D": intersect(D, cls)}
        for name, w, cls in cert.terms()
    ]
    # D . (x e0 - m sum e_i) = r d x - d^2 n m
    return CertificateReport(
        kind="main",
        n=n,
        nef_class=D,
        degree_coefficient=r * d,
        multiplicity_coefficient=d * d * n,
        generators=generators,
        checks=checks,
        params={"d": d, "r": r},
    )


def lambda_certificate(n: int) -> CertificateReport:
    s = isqrt(n)
    return nef_certificate(n, s, ceil_sqrt(n * s * s))


def easy_bound_certificate(n: int, variant: str) -> CertificateReport:
    """Pairing with a smooth r-ic through the points.

    Variant "a" uses r = floor(sqrt n) and only the first r^2 points; variant
    "b" uses r = ceil(sqrt n) and all n points.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if variant == "a":
        r = isqrt(n)
        points = r * r
    elif variant == "b":
        r = ceil_sqrt(n)
        points = n
    else:
        raise ValueError(f"variant must be 'a' or 'b', got {variant!r}")
    C = _uniform_class(r, 1, points, n)
    self_int = intersect(C, C)
    if self_int < 0:
        raise CertificateError(f"C^2 = {self_int} < 0; C is not nef")
    deg_part = intersect(C, _uniform_class(1, 0, 0, n))
    mult_part = -intersect(C, _uniform_class(0, 1, points, n))
    return CertificateReport(
        kind=f"easy-{variant}",
        n=n,
        nef_class=C,
        degree_coefficient=deg_part,
        multiplicity_coefficient=mult_part,
        checks=[{"identity": "C^2 >= 0", "value": self_int, "ok": True}],
        params={"r": r, "points": points},
    )


def pairing(A: Sequence[int], B: Sequence[int]) -> int:
    return intersect(DivisorClass(tuple(A)), DivisorClass(tuple(B)))
