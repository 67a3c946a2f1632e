"""Roé's unloading algorithm, step by step.

Start from (m, ..., m). Routine i repeatedly sorts the tail, and while the
first entry is smaller than the sum of the next i entries, adds
(1, -1, ..., -1, 0, ..., 0). R(m, n) is the first entry at the end.
"""

import time

from fatbounds import lambda_bound, roe_R_block, roe_R_naive
from fatbounds.unloading import format_trace

# A small run, printed in full. The w=(a;b^c,(b-1)^k) notation shows the
# tail only ever takes two adjacent values.
R, trace = roe_R_naive(2, 6, want_trace=True)
print(format_trace(trace))
print("R(2,6) =", R)
print()

# The block engine keeps only (R, S) per routine and agrees with the naive one.
for m, n in [(3, 10), (5, 17), (12, 40)]:
    print(f"R({m},{n}): naive {roe_R_naive(m, n)[0]}, block {roe_R_block(m, n)[0]}, lambda bound {lambda_bound(m, n)}")
print()

# R(m, m^2) stays within 1 of m^2 + m/10.
start = time.perf_counter()
for m in (10, 20, 50, 100):
    R = roe_R_block(m, m * m)[0]
    print(f"m={m:>3}: R = {R}, m^2 + m/10 = {m * m + m / 10}")
print(f"({time.perf_counter() - start:.2f} s)")

# Beyond m = 100 we only report how R compares with m^2 + floor(m/10).
below = [m for m in range(101, 201, 10) if roe_R_block(m, m * m)[0] < m * m + m // 10]
print("m in 101..200 (step 10) with R(m,m^2) < m^2 + floor(m/10):", below or "none")
