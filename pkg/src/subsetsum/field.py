"""Prime-field arithmetic, inverse tables, primality testing and prime sampling."""

from __future__ import annotations

import operator

import numpy as np
from numba import njit

from ._wordops import MAX_MODULUS, field_constants, mulmod, to_table_array
from .errors import CapExceedsModulus, NoPrimeFound, ZeroInverse

__all__ = [
    "PrimeField",
    "PrimeSampler",
    "fp_add",
    "fp_mul",
    "fp_inv",
    "build_inverse_table",
    "is_prime",
    "sample_prime",
]

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)
# Complete for every n < 3.3e24 (Sorenson & Webster), so in particular all 64-bit inputs.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(q: int) -> bool:
    """Deterministic primality test for ``0 <= q < 2**64``."""
    q = operator.index(q)
    if q < 0 or q >= 1 << 64:
        raise ValueError(f"is_prime expects a 64-bit unsigned value, got {q}")
    if q < 2:
        return False
    for sp in _SMALL_PRIMES:
        if q % sp == 0:
            return q == sp
    if q < 97 * 97:
        return True

    d = q - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _WITNESSES:
        x = pow(a, d, q)
        if x == 1 or x == q - 1:
            continue
        for _ in range(s - 1):
            x = x * x % q
            if x == q - 1:
                break
        else:
            return False
    return True


@njit(cache=True)
def _inverse_table(cap, p, pinv, r2):
    inv = np.zeros(cap + 1, dtype=np.uint64)
    if cap >= 1:
        inv[1] = 1
    for j in range(2, cap + 1):
        uj = np.uint64(j)
        inv[j] = mulmod(p - p // uj, inv[np.int64(p % uj)], p, pinv, r2)
    return inv


class PrimeField:
    """The field F_p together with the inverses of ``1..cap``.

    ``inv_table[j]`` holds ``j^-1 mod p`` for ``1 <= j <= cap`` (index 0 is
    unused and set to 0).  Instances are immutable once built.
    """

    __slots__ = ("p", "cap", "inv_table", "_pinv", "_r2", "_inv_tab")

    def __init__(self, p: int, cap: int = 0):
        p = operator.index(p)
        if p < 2 or p >= MAX_MODULUS or not is_prime(p):
            raise ValueError(f"modulus must be a prime below 2^63, got {p}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "cap", 0)
        pinv, r2 = field_constants(p)
        object.__setattr__(self, "_pinv", np.uint64(pinv))
        object.__setattr__(self, "_r2", np.uint64(r2))
        table = build_inverse_table(cap, self)
        table.flags.writeable = False
        object.__setattr__(self, "cap", cap)
        object.__setattr__(self, "inv_table", table)
        tab = to_table_array(table, np.uint64(p), self._pinv, self._r2)
        tab.flags.writeable = False
        object.__setattr__(self, "_inv_tab", tab)

    def __setattr__(self, name, value):
        raise AttributeError("PrimeField is immutable")

    def __repr__(self):
        return f"PrimeField(p={self.p}, cap={self.cap})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(self.p)

    def with_cap(self, cap: int) -> PrimeField:
        """Return a field over the same prime whose inverse table covers ``1..cap``."""
        if cap <= self.cap:
            return self
        return PrimeField(self.p, cap)

    def kernel_args(self):
        """``(p, pinv, r2)`` as ``uint64`` scalars for the numba kernels."""
        return np.uint64(self.p), self._pinv, self._r2


def _check_residue(a: int, field: PrimeField) -> int:
    a = operator.index(a)
    if not 0 <= a < field.p:
        raise ValueError(f"{a} is not a residue modulo {field.p}")
    return a


def fp_add(a: int, b: int, field: PrimeField) -> int:
    return (_check_residue(a, field) + _check_residue(b, field)) % field.p


def fp_mul(a: int, b: int, field: PrimeField) -> int:
    return _check_residue(a, field) * _check_residue(b, field) % field.p


def fp_inv(a: int, field: PrimeField) -> int:
    a = _check_residue(a, field)
    if a == 0:
        raise ZeroInverse(f"0 has no inverse modulo {field.p}")
    return pow(a, -1, field.p)


def build_inverse_table(cap: int, field: PrimeField) -> np.ndarray:
    """Inverses of ``1..cap`` modulo ``field.p`` in O(cap) time.

    Uses ``inv[j] = -(p // j) * inv[p mod j]``, which only ever looks up
    smaller indices.
    """
    cap = operator.index(cap)
    if cap < 0:
        raise ValueError("cap must be non-negative")
    if cap >= field.p:
        raise CapExceedsModulus(f"cap {cap} must be smaller than the modulus {field.p}")
    p, pinv, r2 = field.kernel_args()
    return _inverse_table(cap, p, pinv, r2)


class PrimeSampler:
    """Draws uniformly random primes from ``[lo, hi]`` by rejection sampling.

    The sequence of primes is a deterministic function of ``(lo, hi, rng_seed)``.
    """

    def __init__(self, lo: int, hi: int, rng_seed: int):
        lo, hi, rng_seed = operator.index(lo), operator.index(hi), operator.index(rng_seed)
        if lo < 2 or hi < lo:
            raise ValueError(f"invalid sampling interval [{lo}, {hi}]")
        if hi >= 1 << 64:
            raise ValueError("sampling interval must lie below 2^64")
        if not 0 <= rng_seed < 1 << 64:
            raise ValueError("rng_seed must be an unsigned 64-bit value")
        self.lo = lo
        self.hi = hi
        self.rng_seed = rng_seed
        self._rng = np.random.default_rng(rng_seed)

    @property
    def budget(self) -> int:
        """Number of draws allowed per call to ``sample_prime``."""
        return 64 * max(1, (self.hi - 1).bit_length())

    def draw(self) -> int:
        return int(self._rng.integers(self.lo, self.hi, endpoint=True, dtype=np.uint64))

    def __repr__(self):
        return f"PrimeSampler(lo={self.lo}, hi={self.hi}, rng_seed={self.rng_seed})"


def sample_prime(sampler: PrimeSampler) -> int:
    for _ in range(sampler.budget):
        q = sampler.draw()
        if is_prime(q):
            return q
    raise NoPrimeFound(f"no prime found in [{sampler.lo}, {sampler.hi}] after {sampler.budget} draws")
