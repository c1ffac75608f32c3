"""
Running time against the Bellman DP
===================================

The generating-function pipeline runs in O(n + t log^2 t); the table-filling
DP needs O(n t).  With many items the difference shows quickly.  The same
comparison is available from the command line as ``subsetsum bench``.
"""

# %%
import time

import numpy as np

from subsetsum import Instance, PrimeField, coefficients_mod_p, dp_count_mod_p
from subsetsum.core import prime_interval
from subsetsum.field import PrimeSampler, sample_prime

rng = np.random.default_rng(5)
coefficients_mod_p(Instance((1, 2), 100), PrimeField(101))  # compile kernels

for n, t in ((1000, 1 << 14), (1000, 1 << 16), (4000, 1 << 16)):
    inst = Instance(tuple(int(s) for s in rng.integers(1, t, endpoint=True, size=n)), t)
    lo, hi = prime_interval(n, t)
    field = PrimeField(sample_prime(PrimeSampler(lo, hi, 0)))
    start = time.perf_counter()
    fast = coefficients_mod_p(inst, field)
    mid = time.perf_counter()
    slow = dp_count_mod_p(inst, field)
    end = time.perf_counter()
    print(f"n={n:5d} t={t:6d}  genfunc {mid - start:6.3f}s  dp {end - mid:6.3f}s  agree={fast == slow}")

# %%
# Growth of the pipeline alone: roughly doubling per doubling of t.
for log in (16, 17, 18):
    t = 1 << log
    inst = Instance(tuple(int(s) for s in rng.integers(1, t, endpoint=True, size=1000)), t)
    lo, hi = prime_interval(1000, t)
    field = PrimeField(sample_prime(PrimeSampler(lo, hi, log)))
    start = time.perf_counter()
    coefficients_mod_p(inst, field)
    print(f"t=2^{log}: {time.perf_counter() - start:.2f}s")
