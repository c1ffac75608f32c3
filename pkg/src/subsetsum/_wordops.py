"""Word-sized modular arithmetic kernels shared by the numba code paths.

Residues are stored as ``uint64``.  For an odd modulus ``q < 2**63`` products
are reduced with Montgomery REDC (R = 2**64); the high half of the 128-bit
product is assembled from 32-bit limbs since numba has no 128-bit integer.

Field kernels accept a "table form" second operand: for moduli below 2**32 the
plain residue (``a * b`` fits in 64 bits and is reduced with ``%``), otherwise
the Montgomery form ``b * R mod p``.  ``pinv == 0`` selects the plain path.
"""

import numpy as np
from numba import njit

MASK32 = np.uint64(0xFFFFFFFF)
SHIFT32 = np.uint64(32)
ZERO = np.uint64(0)
ONE = np.uint64(1)

PLAIN_LIMIT = 1 << 32
MAX_MODULUS = 1 << 63


def montgomery_constants(q: int) -> tuple[int, int]:
    """Return ``(q^-1 mod 2^64, 2^128 mod q)`` for an odd modulus."""
    if q % 2 == 0 or q >= MAX_MODULUS:
        raise ValueError(f"Montgomery reduction needs an odd modulus below 2^63, got {q}")
    return pow(q, -1, 1 << 64), (1 << 128) % q


def field_constants(p: int) -> tuple[int, int]:
    """Kernel constants ``(pinv, r2)`` for a field modulus; ``(0, 0)`` selects plain mode."""
    if p < PLAIN_LIMIT:
        return 0, 0
    return montgomery_constants(p)


def table_form(x: int, p: int) -> int:
    """Convert a residue into the representation expected as the second operand of ``fmul``."""
    x %= p
    if p < PLAIN_LIMIT:
        return x
    return (x << 64) % p


@njit(inline="always", cache=True)
def mulhi(a, b):
    a0 = a & MASK32
    a1 = a >> SHIFT32
    b0 = b & MASK32
    b1 = b >> SHIFT32
    p00 = a0 * b0
    p01 = a0 * b1
    p10 = a1 * b0
    p11 = a1 * b1
    mid = (p00 >> SHIFT32) + (p01 & MASK32) + (p10 & MASK32)
    return p11 + (p01 >> SHIFT32) + (p10 >> SHIFT32) + (mid >> SHIFT32)


@njit(inline="always", cache=True)
def redc(a, b, q, qinv):
    """``a * b * 2^-64 mod q`` for ``a, b < q``."""
    lo = a * b
    hi = mulhi(a, b)
    m = lo * qinv
    mh = mulhi(m, q)
    if hi >= mh:
        return hi - mh
    return hi + q - mh


@njit(inline="always", cache=True)
def add_mod(a, b, q):
    s = a + b
    if s >= q:
        s -= q
    return s


@njit(inline="always", cache=True)
def sub_mod(a, b, q):
    if a >= b:
        return a - b
    return a + q - b


@njit(inline="always", cache=True)
def fmul(a, b_tab, p, pinv):
    """``a * b mod p`` where ``b_tab`` is ``b`` in table form."""
    if pinv == ZERO:
        return (a * b_tab) % p
    return redc(a, b_tab, p, pinv)


@njit(inline="always", cache=True)
def to_table(x, p, pinv, r2):
    if pinv == ZERO:
        return x
    return redc(x, r2, p, pinv)


@njit(inline="always", cache=True)
def mulmod(a, b, p, pinv, r2):
    """Full ``a * b mod p`` with both operands as plain residues."""
    if pinv == ZERO:
        return (a * b) % p
    return redc(redc(a, b, p, pinv), r2, p, pinv)


@njit(cache=True)
def to_table_array(xs, p, pinv, r2):
    out = np.empty_like(xs)
    for i in range(xs.shape[0]):
        out[i] = to_table(xs[i], p, pinv, r2)
    return out
