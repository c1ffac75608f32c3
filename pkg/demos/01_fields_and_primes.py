"""
Prime fields and random primes
==============================

Everything in the pipeline happens in F_p for a prime p larger than the
target.  This script shows the field helpers and how the modulus is drawn.
"""

# %%
from subsetsum import PrimeField, PrimeSampler, build_inverse_table, fp_inv, fp_mul, is_prime, sample_prime

field = PrimeField(7, cap=6)
print(field)
print("inverses of 1..6 mod 7:", field.inv_table[1:].tolist())
print("2^-1 mod 7 =", fp_inv(2, field), " check:", fp_mul(2, fp_inv(2, field), field))

# %%
# The inverse table is built in linear time, without one extended Euclid per entry.
big = PrimeField(4611686018427387847)
table = build_inverse_table(10, big)
print([j * int(table[j]) % big.p for j in range(1, 11)])

# %%
# Deterministic Miller-Rabin: 561 is a Carmichael number, the other is a 62-bit prime.
for q in (2, 561, 4611686018427387847):
    print(q, is_prime(q))

# %%
# Rejection sampling gives a uniformly random prime in [lo, hi]; a seed makes it reproducible.
sampler = PrimeSampler(11, 100, rng_seed=2024)
print([sample_prime(sampler) for _ in range(10)])
