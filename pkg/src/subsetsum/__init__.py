"""Randomized near-linear SubsetSum and counting modulo a prime.

The subset-count generating function is rebuilt as the exponential of its
logarithm over F_p, so deciding SubsetSum, counting solutions mod p and the
mod-p #Knapsack count all reduce to one power-series exponentiation.
"""

from .core import (
    Answer,
    Decision,
    Instance,
    ItemHistogram,
    build_log_series,
    coefficients_mod_p,
    count_mod_p,
    decide,
    histogram,
    knapsack_count_mod_p,
)
from .errors import (
    CapExceedsModulus,
    FieldTooSmall,
    InstanceTooLarge,
    NonPositiveItem,
    NonzeroConstantTerm,
    NoPrimeFound,
    ParseError,
    PrimeSamplingFailed,
    SizeOverflow,
    SubsetSumError,
    ZeroInverse,
)
from .field import PrimeField, PrimeSampler, build_inverse_table, fp_add, fp_inv, fp_mul, is_prime, sample_prime
from .oracle import brute_force_decide, dp_count_exact, dp_count_mod_p
from .polymul import ModPoly, NttPlan, crt_combine, multiply, multiply_lowdeg_schoolbook, multiply_ntt, ntt_forward, ntt_inverse
from .series import exp_series, exp_series_naive

__version__ = "0.1.0"
