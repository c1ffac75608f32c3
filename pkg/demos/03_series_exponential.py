"""
Exponential of a power series
=============================

exp(f) mod x^(t+1) is computed from the recurrence i*g_i = sum (i-j) f_{i-j} g_j
by divide and conquer: each half of the index range hands its contribution
to the other half in a single convolution.
"""

# %%
import time

import numpy as np

from subsetsum import ModPoly, PrimeField, exp_series, exp_series_naive, multiply

field = PrimeField(11)
print("exp(x) mod (x^5, 11):", exp_series(ModPoly([0, 1], field), 4, field))

# %%
# ln((1+x)^2) = 2x - x^2 + ..., and exponentiating gives back (1+x)^2.
f5 = PrimeField(5)
print(exp_series(ModPoly([0, 2, 4], f5), 2, f5))

# %%
# exp turns sums into products.
p = 2147483647
field = PrimeField(p)
rng = np.random.default_rng(0)
t = 400
a = ModPoly(np.concatenate([[0], rng.integers(0, p, t)]).astype(np.uint64), field)
b = ModPoly(np.concatenate([[0], rng.integers(0, p, t)]).astype(np.uint64), field)
lhs = exp_series(a + b, t, field)
rhs = multiply(exp_series(a, t, field), exp_series(b, t, field)).truncate(t + 1)
print("exp(a+b) == exp(a) exp(b):", lhs == rhs)

# %%
# Quadratic reference versus divide and conquer.
for t in (500, 2000):
    f = ModPoly(np.concatenate([[0], rng.integers(0, p, t)]).astype(np.uint64), field)
    start = time.perf_counter()
    fast = exp_series(f, t, field)
    mid = time.perf_counter()
    slow = exp_series_naive(f, t, field)
    end = time.perf_counter()
    print(f"t={t}: dc {1e3 * (mid - start):.1f} ms, naive {1e3 * (end - mid):.1f} ms, equal={fast == slow}")
