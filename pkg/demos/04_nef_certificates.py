"""The divisor class behind the lambda_n bound, checked by arithmetic.

On the plane blown up at n points, D = r d e0 - d^2 (e1 + ... + en) is
written as r*C plus nonnegative multiples of e_i - e_{i+1} and e_n. D meets
each of those nonnegatively, so it is nef, and pairing D with
d(m,n) e0 - m(e1 + ... + en) gives d(m, n) >= m n d / r.
"""

from fatbounds import effective_decomposition, lambda_bound, nef_certificate
from fatbounds.lattice import easy_bound_certificate

cert = effective_decomposition(12, 2, 7)
print("n=12, d=2, r=7")
print("  weight on C:", cert.c_weight)
print("  weights on e_j - e_{j+1}:", cert.difference_weights)
print("  weight on e_12:", cert.beta)
print("  sums to D:", cert.total().label())

report = nef_certificate(12, 3, 11)
print()
print(report.statement(), "; at m=5:", report.bound(5), "=", lambda_bound(5, 12))
data = report.to_dict()
print("  JSON keys:", ", ".join(data))
print("  checks passed:", sum(c["ok"] for c in data["checks"]), "of", len(data["checks"]))

print()
for variant in ("a", "b"):
    easy = easy_bound_certificate(10, variant)
    print(f"easy variant {variant}: {easy.statement()}")
