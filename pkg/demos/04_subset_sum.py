"""
Deciding and counting SubsetSum
===============================

A(x) = prod (1 + x^{s_i}) counts subsets by their sum.  Its logarithm has a
closed form in terms of the item histogram, so A mod x^(t+1) is one
power-series exponential away.
"""

# %%
from subsetsum import (
    Instance,
    PrimeField,
    build_log_series,
    coefficients_mod_p,
    count_mod_p,
    decide,
    dp_count_exact,
    histogram,
    knapsack_count_mod_p,
)

inst = Instance((3, 1, 2, 5, 5), t=10)
field = PrimeField(101)

hist = histogram(inst)
print("histogram:", hist.a.tolist(), "dropped:", hist.dropped)
print("ln A mod x^11:", build_log_series(hist, inst.t, field))
print("A mod x^11:   ", coefficients_mod_p(inst, field))
print("exact counts: ", dp_count_exact(inst))

# %%
print("subsets summing to 10 (mod 101):", count_mod_p(inst, field))
print("subsets with sum <= 10 (mod 101):", knapsack_count_mod_p(inst, field))

# %%
# The decision draws a random prime from [t+1, (n+t)^3].  YES is always right;
# NO is wrong only if every sampled prime divides the true count.
print(decide(inst, seed=1))
print(decide(Instance((2, 4, 6), t=7), seed=1, repeats=3))

# %%
# Counts wrap around mod p: thirty 1s give C(30, 15) subsets summing to 15.
ones = Instance((1,) * 30, t=15)
print(dp_count_exact(ones)[15], count_mod_p(ones, PrimeField(101)), 155117520 % 101)
