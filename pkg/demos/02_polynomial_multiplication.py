"""
Exact products over F_p
=======================

Coefficients of a product over F_p can be as large as about t * p^2 before
reduction, far beyond double precision.  Products are therefore taken
modulo three 62-bit NTT primes and stitched back together with the CRT.
"""

# %%
import random

from subsetsum import ModPoly, NttPlan, PrimeField, crt_combine, multiply, multiply_lowdeg_schoolbook, multiply_ntt
from subsetsum import ntt_constants

p = 4611686018427387847
field = PrimeField(p)

f = ModPoly([1, 1], field)
print("(1+x)^2 =", multiply(f, f))

# %%
# Transform path and schoolbook path agree, even with every coefficient at p-1.
worst = ModPoly([p - 1] * 300, field)
print(multiply_ntt(worst, worst) == multiply_lowdeg_schoolbook(worst, worst))

# %%
plan = NttPlan.for_length(1000)
print("transform size:", plan.size)
print("moduli:", ntt_constants.NTT_PRIMES)

# %%
# CRT recombination recovers any integer below q1*q2*q3 (186 bits).
v = random.getrandbits(150)
residues = [v % q for q in ntt_constants.NTT_PRIMES]
print(crt_combine(*residues) == v, crt_combine(*residues, field) == v % p)
