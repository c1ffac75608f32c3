"""Reference implementations used to check the generating-function pipeline.

None of these share code with the fast path: the Bellman table is updated
with plain numpy arithmetic, the exact variant with Python integers.
"""

from __future__ import annotations

import numpy as np

from .core import Instance
from .errors import InstanceTooLarge, NonPositiveItem
from .field import PrimeField
from .polymul import ModPoly

__all__ = ["dp_count_mod_p", "dp_count_exact", "brute_force_decide", "EXACT_ITEM_LIMIT", "BRUTE_FORCE_LIMIT"]

EXACT_ITEM_LIMIT = 64
BRUTE_FORCE_LIMIT = 24


def _check_items(instance: Instance):
    for i, s in enumerate(instance.items):
        if s < 1:
            raise NonPositiveItem(f"item {i} is {s}; items must be positive")


def dp_count_mod_p(instance: Instance, field: PrimeField) -> ModPoly:
    """Bellman's O(nt) table of subset counts per sum, modulo p."""
    _check_items(instance)
    t = instance.t
    p = np.uint64(field.p)
    row = np.zeros(t + 1, dtype=np.uint64)
    row[0] = 1
    for s in instance.items:
        if s > t:
            continue
        # the right-hand side is evaluated from the old row, which is the
        # same as sweeping i downward from t: each item is used at most once
        row[s:] = (row[s:] + row[: t + 1 - s]) % p
    return ModPoly(row, field)


def dp_count_exact(instance: Instance, max_items: int = EXACT_ITEM_LIMIT) -> list[int]:
    """Exact subset counts for every sum ``0..t`` (arbitrary precision)."""
    _check_items(instance)
    if instance.n > max_items:
        raise InstanceTooLarge(f"{instance.n} items exceeds the exact-count limit of {max_items}")
    t = instance.t
    row = [0] * (t + 1)
    row[0] = 1
    for s in instance.items:
        for i in range(t, s - 1, -1):
            row[i] += row[i - s]
    return row


def brute_force_decide(instance: Instance) -> bool:
    """Whether some subset sums to ``t``, by enumerating all ``2^n`` subsets."""
    _check_items(instance)
    if instance.n > BRUTE_FORCE_LIMIT:
        raise InstanceTooLarge(f"{instance.n} items exceeds the brute-force limit of {BRUTE_FORCE_LIMIT}")
    t = instance.t
    sums = np.zeros(1, dtype=np.int64)
    for s in instance.items:
        # saturate at t+1 so large items cannot overflow
        sums = np.concatenate([sums, np.minimum(sums + s, t + 1)])
    return bool((sums == t).any())
