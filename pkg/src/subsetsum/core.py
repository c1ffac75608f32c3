"""SubsetSum decision and counting modulo a prime via generating functions.

The subset-count polynomial ``A(x) = prod_i (1 + x^{s_i})`` is recovered
modulo ``x^(t+1)`` as ``exp(B(x))``, where ``B = ln A`` is written down term
by term from the item histogram::

    B(x) = sum_k a_k sum_{j>=1} (-1)^(j-1) x^(jk) / j

All arithmetic happens in F_p for a prime ``p > t``, so every denominator
``j <= t`` is invertible.
"""

from __future__ import annotations

import enum
import operator
from dataclasses import dataclass, field as dc_field

import numpy as np
from numba import njit

from ._wordops import add_mod, fmul, sub_mod
from .errors import FieldTooSmall, NoPrimeFound, NonPositiveItem, PrimeSamplingFailed
from .field import PrimeField, PrimeSampler, sample_prime
from .polymul import ModPoly
from .series import exp_series

__all__ = [
    "Instance",
    "ItemHistogram",
    "Answer",
    "Decision",
    "MODULUS_CEILING",
    "prime_interval",
    "derive_seeds",
    "histogram",
    "build_log_series",
    "coefficients_mod_p",
    "count_mod_p",
    "knapsack_count_mod_p",
    "decide",
]

MODULUS_CEILING = 1 << 62


@dataclass(frozen=True)
class Instance:
    """A multiset of items and a target sum."""

    items: tuple[int, ...]
    t: int

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(operator.index(s) for s in self.items))
        object.__setattr__(self, "t", operator.index(self.t))
        if self.t < 0:
            raise ValueError(f"target must be non-negative, got {self.t}")

    @property
    def n(self) -> int:
        return len(self.items)


@dataclass(frozen=True)
class ItemHistogram:
    """``a[k]`` is the multiplicity of value ``k`` (``1 <= k <= t``); ``a[0]`` is always 0.

    Items larger than the target cannot appear in any subset of sum at most
    ``t`` and are only counted in ``dropped``.
    """

    a: np.ndarray
    dropped: int

    @property
    def n(self) -> int:
        return int(self.a.sum()) + self.dropped

    @property
    def t(self) -> int:
        return len(self.a) - 1


class Answer(str, enum.Enum):
    YES = "YES"
    NO = "NO"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Decision:
    """Verdict of ``decide`` with the evidence behind it.

    ``primes[i]`` and ``counts[i]`` are the prime and the residue of the
    subset count from round ``i``.  Rounds stop at the first nonzero residue,
    so fewer than ``repeats`` entries may be present.  A YES is always
    correct; a NO can be wrong only if every sampled prime divides the true
    count.
    """

    answer: Answer
    primes: list[int] = dc_field(default_factory=list)
    counts: list[int] = dc_field(default_factory=list)
    repeats: int = 1
    seed: int = 0

    def __bool__(self):
        return self.answer is Answer.YES


def histogram(instance: Instance) -> ItemHistogram:
    t = instance.t
    for pos, s in enumerate(instance.items):
        if s < 1:
            raise NonPositiveItem(f"item {pos} is {s}; items must be positive")
    keep = np.array([s for s in instance.items if s <= t], dtype=np.int64)
    a = np.bincount(keep, minlength=t + 1).astype(np.int64)
    return ItemHistogram(a=a, dropped=instance.n - keep.size)


@njit(cache=True)
def _log_series(a, t, inv_tab, p, pinv):
    b = np.zeros(t + 1, dtype=np.uint64)
    for k in range(1, t + 1):
        if a[k] == 0:
            continue
        ak = np.uint64(a[k]) % p
        for j in range(1, t // k + 1):
            term = fmul(ak, inv_tab[j], p, pinv)
            if j % 2 == 1:
                b[j * k] = add_mod(b[j * k], term, p)
            else:
                b[j * k] = sub_mod(b[j * k], term, p)
    return b


def _require_field(t: int, field: PrimeField) -> PrimeField:
    if field.p <= t:
        raise FieldTooSmall(f"need a prime p > t, got p={field.p}, t={t}")
    return field.with_cap(t)


def build_log_series(hist: ItemHistogram, t: int, field: PrimeField) -> ModPoly:
    """Image in F_p[x] of ``ln A(x)`` truncated after degree ``t``."""
    field = _require_field(t, field)
    a = np.zeros(t + 1, dtype=np.int64)
    k = min(t + 1, len(hist.a))
    a[:k] = hist.a[:k]
    p, pinv, _ = field.kernel_args()
    return ModPoly(_log_series(a, t, field._inv_tab, p, pinv), field)


def coefficients_mod_p(instance: Instance, field: PrimeField) -> ModPoly:
    """``A(x) mod (x^(t+1), p)``: entry ``i`` is the number of subsets summing to ``i``, mod p."""
    t = instance.t
    field = _require_field(t, field)
    hist = histogram(instance)
    return exp_series(build_log_series(hist, t, field), t, field)


def count_mod_p(instance: Instance, field: PrimeField) -> int:
    """Number of subsets summing exactly to ``t``, modulo ``field.p``.

    This is a residue, not the true count, which may be as large as ``2**n``.
    """
    return coefficients_mod_p(instance, field)[instance.t]


def knapsack_count_mod_p(instance: Instance, field: PrimeField) -> int:
    """Number of subsets with sum at most ``t``, modulo ``field.p``."""
    coeffs = coefficients_mod_p(instance, field)
    return sum(coeffs.tolist()) % field.p


def prime_interval(n: int, t: int) -> tuple[int, int]:
    """Sampling interval for the modulus: ``[t+1, (n+t)^3]``, capped at 2^62.

    Tiny instances make that interval too thin to be sure of primes, so the
    top is raised to at least ``2t + 64`` (Bertrand guarantees a prime there).
    """
    lo = max(2, t + 1)
    hi = max(min((n + t) ** 3, MODULUS_CEILING), 2 * t + 64)
    return lo, hi


def derive_seeds(seed: int, count: int) -> list[int]:
    """Independent 64-bit seeds for ``count`` rounds, derived from one master seed."""
    state = np.random.SeedSequence(seed).generate_state(count, dtype=np.uint64)
    return [int(s) for s in state]


def decide(instance: Instance, seed: int, repeats: int = 1) -> Decision:
    """Decide whether some subset sums to ``t``.

    Each round draws a fresh random prime from ``prime_interval`` and
    computes the subset count modulo it.  The first nonzero residue proves a
    YES.  If all ``repeats`` rounds give zero the answer is NO, which is wrong
    with probability O((n+t)^-repeats).
    """
    repeats = operator.index(repeats)
    if repeats < 1:
        raise ValueError("repeats must be at least 1")
    t = instance.t
    if t == 0:
        return Decision(Answer.YES, repeats=repeats, seed=seed)

    hist = histogram(instance)
    lo, hi = prime_interval(instance.n, t)
    primes, counts = [], []
    for round_seed in derive_seeds(seed, repeats):
        try:
            p = sample_prime(PrimeSampler(lo, hi, round_seed))
        except NoPrimeFound as exc:
            raise PrimeSamplingFailed(str(exc)) from exc
        field = PrimeField(p, cap=t)
        residue = exp_series(build_log_series(hist, t, field), t, field)[t]
        primes.append(p)
        counts.append(residue)
        if residue:
            return Decision(Answer.YES, primes, counts, repeats, seed)
    return Decision(Answer.NO, primes, counts, repeats, seed)
