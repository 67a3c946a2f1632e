"""How lambda_n compares with the two classical bounds.

d(m, n) >= m*floor(sqrt n) and d(m, n) >= m*n/ceil(sqrt n) are the easy
bounds. lambda_n dominates both; write n = s^2 + t with 0 <= t <= 2s and the
ties show up exactly at t in {0, 1} and t in {0, 2s-1, 2s}.
"""

from fractions import Fraction

from fatbounds import lambda_, optimize_dr, sqrt_decompose
from fatbounds.arith import approx, ceil_sqrt

print(f"{'n':>4} {'s':>3} {'t':>3} {'floor sqrt':>10} {'n/ceil sqrt':>12} {'lambda_n':>10} {'best n d/r':>18}")
for n in range(2, 31):
    s, t = sqrt_decompose(n)
    ratio = Fraction(n, ceil_sqrt(n))
    lam = lambda_(n)
    pair, best = optimize_dr(n)
    marks = ("=" if lam == s else " ") + ("=" if lam == ratio else " ")
    print(
        f"{n:>4} {s:>3} {t:>3} {s:>10} {approx(ratio, 4):>12} {approx(lam, 4):>10}{marks}"
        f" {approx(best, 4):>8} (d={pair.d},r={pair.r})"
    )

# Searching over every admissible (d, r) can beat lambda_n. n = 12 is the
# smallest case: lambda_12 = 36/11 but (d, r) = (2, 7) gives 24/7.
print()
print("n = 12:", lambda_(12), "vs", optimize_dr(12))
