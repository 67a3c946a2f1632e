import json

import pytest

from fatbounds.arith import ceil_sqrt, isqrt
from fatbounds.bounds import lambda_bound
from fatbounds.lattice import (
    CertificateError,
    DivisorClass,
    class_C,
    class_D,
    difference_class,
    easy_bound_certificate,
    effective_decomposition,
    gram_matrix,
    intersect,
    lambda_certificate,
    nef_certificate,
)


def gram_pairing(a, b):
    """x^T G y with G = diag(1, -1, ..., -1) written out as a full matrix."""
    size = len(a)
    G = [[(1 if i == 0 else -1) if i == j else 0 for j in range(size)] for i in range(size)]
    return sum(a[i] * G[i][j] * b[j] for i in range(size) for j in range(size))


def e(i, n):
    return DivisorClass.basis(i, n)


def test_intersect_examples():
    assert intersect(e(0, 2), e(0, 2)) == 1
    assert intersect(e(1, 2), e(2, 2)) == 0
    conic = DivisorClass((2, -1, -1))
    assert intersect(conic, difference_class(1, 2)) == 0


def test_gram_matrix_signature():
    G = gram_matrix(6)
    for i in range(7):
        for j in range(7):
            assert G[i][j] == (0 if i != j else (1 if i == 0 else -1))


def test_form_bilinear_symmetric():
    A, B, C = DivisorClass((3, 1, -2, 0)), DivisorClass((-1, 4, 4, 2)), DivisorClass((0, 5, -1, 1))
    assert intersect(A, B) == intersect(B, A) == gram_pairing(A.coefficients, B.coefficients)
    assert intersect(2 * A + C, B) == 2 * intersect(A, B) + intersect(C, B)


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        intersect(e(0, 2), e(0, 3))


def test_class_C_and_D():
    assert class_C(1, 1, 2).coefficients == (1, -1, 0)
    assert class_C(2, 7, 12).coefficients == (2,) + (-1,) * 7 + (0,) * 5
    assert class_C(3, 9, 9).coefficients == (3,) + (-1,) * 9
    assert class_D(2, 7, 12).coefficients == (14,) + (-4,) * 12
    assert class_D(1, 1, 1).coefficients == (1, -1)
    assert class_D(3, 10, 10).coefficients == (30,) + (-9,) * 10


def summed(cert):
    acc = [0] * (cert.n + 1)
    for _, w, cls in cert.terms():
        for idx, a in enumerate(cls.coefficients):
            acc[idx] += w * a
    return tuple(acc)


def test_decomposition_n12():
    cert = effective_decomposition(12, 2, 7)
    assert cert.c_weight == 7
    assert cert.telescope == [3 * j for j in range(1, 8)]
    assert cert.tail == [17, 13, 9, 5]
    assert cert.beta == 1
    assert summed(cert) == class_D(2, 7, 12).coefficients


def test_decomposition_square_case():
    cert = effective_decomposition(9, 3, 9)
    assert all(w == 0 for w in cert.difference_weights) and cert.beta == 0
    assert summed(cert) == (9 * class_C(3, 9, 9)).coefficients == class_D(3, 9, 9).coefficients


def test_decomposition_r_equals_n():
    cert = effective_decomposition(10, 3, 10)
    assert cert.telescope == list(range(1, 10))
    assert cert.beta == 10
    assert summed(cert) == class_D(3, 10, 10).coefficients


@pytest.mark.parametrize("n, d, r", [(12, 2, 6), (12, 3, 13), (12, 0, 3)])
def test_decomposition_rejects_bad_hypotheses(n, d, r):
    with pytest.raises(CertificateError):
        effective_decomposition(n, d, r)


def test_every_admissible_pair_decomposes():
    for n in range(1, 60):
        for d in range(1, isqrt(n) + 1):
            for r in range(ceil_sqrt(n * d * d), n + 1):
                cert = effective_decomposition(n, d, r)
                assert summed(cert) == class_D(d, r, n).coefficients
                assert min(cert.difference_weights + [cert.beta, cert.c_weight]) >= 0


def test_nef_certificate_n12():
    rep = nef_certificate(12, 2, 7)
    assert all(c["ok"] for c in rep.checks)
    assert rep.checks[0] == {"identity": "D.C = 0", "value": 0, "ok": True}
    assert rep.checks[-1]["value"] == 4
    assert rep.bound(1) == 4


def test_nef_certificate_square_and_r_equals_n():
    rep = nef_certificate(9, 3, 9)
    assert intersect(rep.nef_class, rep.nef_class) == 0
    rep = nef_certificate(10, 3, 10)
    assert [rep.bound(m) for m in (1, 2, 5)] == [3, 6, 15]


def test_nef_pairing_with_own_generators():
    for n in range(2, 80):
        rep = lambda_certificate(n)
        assert all(g["pairing_with_D"] >= 0 for g in rep.generators)
        D = rep.nef_class
        for g in rep.generators:
            assert g["pairing_with_D"] == gram_pairing(D.coefficients, g["class"])


def test_certificate_bound_matches_lambda_bound():
    for n in range(2, 200):
        rep = lambda_certificate(n)
        for m in (1, 2, 3, 7, 50):
            assert rep.bound(m) == lambda_bound(m, n)


def test_certificate_json_roundtrip():
    data = json.loads(nef_certificate(12, 2, 7).to_json())
    assert data["schema"] == 1
    assert data["d"] == 2 and data["r"] == 7
    assert data["bound_ratio"] == "24/7"
    assert json.loads(lambda_certificate(12).to_json())["bound_ratio"] == "36/11"
    weights = {g["name"]: g["weight"] for g in data["generators"]}
    assert weights["C"] == 7 and weights["e12"] == 1 and weights["e8-e9"] == 17
    # re-audit from the JSON alone
    total = [0] * 13
    for g in data["generators"]:
        for idx, a in enumerate(g["class"]):
            total[idx] += g["weight"] * a
    assert total == data["nef_class"]


@pytest.mark.parametrize(
    "n, variant, bounds_by_m",
    [(10, "a", {1: 3, 4: 12}), (9, "a", {1: 3, 2: 6}), (9, "b", {1: 3, 2: 6}), (5, "b", {1: 2, 3: 5})],
)
def test_easy_certificates(n, variant, bounds_by_m):
    rep = easy_bound_certificate(n, variant)
    for m, b in bounds_by_m.items():
        assert rep.bound(m) == b


def test_easy_certificate_coefficients():
    rep = easy_bound_certificate(10, "a")
    assert (rep.degree_coefficient, rep.multiplicity_coefficient) == (3, 9)
    rep = easy_bound_certificate(5, "b")
    assert (rep.degree_coefficient, rep.multiplicity_coefficient) == (3, 5)
    with pytest.raises(ValueError):
        easy_bound_certificate(5, "c")
