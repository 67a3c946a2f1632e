"""Roé's constant r(n) from the averaged recurrence.

r(n) is exact and rational. It sits below lambda_n, and below the analytic
estimate sqrt(n-1) - pi/8 + 1/sqrt(n-1). R(m, n) sits between m r(n) and
m r(n) + 2(n-1).
"""

from fatbounds import lambda_, roe_R_block, roe_r, roe_r_product, roe_upper_bound_analytic
from fatbounds.arith import approx

for n in (3, 4, 5, 10, 50, 200):
    r = roe_r(n)
    assert r == roe_r_product(n)
    print(
        f"n={n:>3}  r(n) ~ {approx(r, 6)}  analytic <= {roe_upper_bound_analytic(n, 6)}"
        f"  lambda_n ~ {approx(lambda_(n), 6)}  denominator has {len(str(r.denominator))} digits"
    )

# m lambda_n - R(m, n) grows without bound in m.
n = 20
for m in (10, 100, 1000, 10000):
    gap = m * lambda_(n) - roe_R_block(m, n)[0]
    print(f"n={n}, m={m:>5}: m*lambda_n - R = {approx(gap, 3)}")
