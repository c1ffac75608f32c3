"""Truncated exponential of power series over F_p.

For ``f`` with zero constant term, ``g = exp(f) mod x^(t+1)`` satisfies
``g' = g f'``, i.e. ``i g_i = sum_{j<i} (i-j) f_{i-j} g_j`` with ``g_0 = 1``.
``exp_series`` evaluates this online recurrence by divide and conquer: once
``g_l..g_m`` are final, their contribution to ``g_{m+1}..g_r`` is one
convolution with the weighted series ``F(x) = sum_k k f_k x^k``.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from . import ntt_constants as nc
from ._wordops import add_mod, fmul, to_table, to_table_array
from .errors import FieldTooSmall, NonzeroConstantTerm, SizeOverflow
from .field import PrimeField
from .polymul import (
    SCHOOLBOOK_CUTOFF,
    ModPoly,
    _dif,
    _garner,
    _load,
    _pointwise_inverse,
    convolution_context,
)

__all__ = ["BASE_CASE", "exp_series", "exp_series_naive"]

# Segments up to this length are finished by the direct recurrence.
BASE_CASE = 32


@njit(cache=True)
def _weighted(f, p, pinv, r2):
    wf = np.zeros_like(f)
    for k in range(1, f.shape[0]):
        wf[k] = fmul(f[k], to_table(np.uint64(k) % p, p, pinv, r2), p, pinv)
    return wf


@njit(cache=True)
def _next_pow2(n):
    size = 1
    log = 0
    while size < n:
        size *= 2
        log += 1
    return size, log


@njit(cache=True)
def _base(g, wf_tab, inv_tab, l, r, p, pinv):
    for i in range(l, r + 1):
        if i == 0:
            continue
        s = g[i]
        for j in range(l, i):
            s = add_mod(s, fmul(g[j], wf_tab[i - j], p, pinv), p)
        g[i] = fmul(s, inv_tab[i], p, pinv)


@njit(cache=True)
def _cross(g, wf, wf_tab, t, l, m, r, fcache, have, tw, itw, qs, qinvs, r2s, gk, p, pinv, d_tab, e_tab):
    """Add ``sum_{j=l}^{m} (i-j) f_{i-j} g_j`` into ``g_i`` for ``m < i <= r``."""
    span = r - l + 1
    if span < SCHOOLBOOK_CUTOFF:
        for i in range(m + 1, r + 1):
            s = np.uint64(0)
            for j in range(l, m + 1):
                s = add_mod(s, fmul(g[j], wf_tab[i - j], p, pinv), p)
            g[i] = add_mod(g[i], s, p)
        return

    # Cyclic length n >= r-l+1: wrapped terms land below index m-l+1 and
    # never touch the window m-l+1..r-l that is read back.  For the same
    # reason F may be taken as wf[0:n] regardless of r-l, so its transform
    # depends on n alone and is cached.
    n, log = _next_pow2(span)
    if not have[log]:
        cnt = min(n, t + 1)
        for k in range(3):
            a = _load(wf, 0, cnt, n, qs[k])
            _dif(a, tw[k, :n], qs[k], qinvs[k])
            fcache[k, n : 2 * n] = a
        have[log] = True

    res = np.empty((3, n), dtype=np.uint64)
    for k in range(3):
        b = _load(g, l, m - l + 1, n, qs[k])
        _dif(b, tw[k, :n], qs[k], qinvs[k])
        _pointwise_inverse(b, fcache[k, n : 2 * n], itw[k, :n], qs[k], qinvs[k], r2s[k])
        res[k] = b
    _garner(res[0], res[1], res[2], m - l + 1, r - l + 1, g, m + 1, qs, qinvs, gk, p, pinv, d_tab, e_tab)


@njit(cache=True)
def _exp_dc(wf, wf_tab, inv_tab, t, nmax, tw, itw, qs, qinvs, r2s, gk, p, pinv, d_tab, e_tab):
    g = np.zeros(t + 1, dtype=np.uint64)
    g[0] = 1
    fcache = np.empty((3, 2 * nmax), dtype=np.uint64)
    have = np.zeros(64, dtype=np.bool_)

    # Explicit stack of (l, r, stage); stage 1 means the left half is done.
    stack = np.empty((256, 3), dtype=np.int64)
    stack[0, 0] = 0
    stack[0, 1] = t
    stack[0, 2] = 0
    sp = 1
    while sp > 0:
        sp -= 1
        l = stack[sp, 0]
        r = stack[sp, 1]
        stage = stack[sp, 2]
        m = (l + r) // 2
        if stage == 0:
            if r - l + 1 <= BASE_CASE:
                _base(g, wf_tab, inv_tab, l, r, p, pinv)
                continue
            stack[sp, 0] = l
            stack[sp, 1] = r
            stack[sp, 2] = 1
            stack[sp + 1, 0] = l
            stack[sp + 1, 1] = m
            stack[sp + 1, 2] = 0
            sp += 2
        else:
            _cross(g, wf, wf_tab, t, l, m, r, fcache, have, tw, itw, qs, qinvs, r2s, gk, p, pinv, d_tab, e_tab)
            stack[sp, 0] = m + 1
            stack[sp, 1] = r
            stack[sp, 2] = 0
            sp += 1
    return g


def _prepare(f: ModPoly, t: int, field: PrimeField) -> np.ndarray:
    if f.field.p != field.p:
        raise ValueError(f"series is over p={f.field.p} but field has p={field.p}")
    if t < 0:
        raise ValueError("truncation degree must be non-negative")
    if t >= field.p:
        raise FieldTooSmall(f"need p > t, got p={field.p}, t={t}")
    if len(f) and f[0] != 0:
        raise NonzeroConstantTerm("exp is only defined here for series with zero constant term")
    return f.truncate(t + 1).coeffs


def exp_series(f: ModPoly, t: int, field: PrimeField) -> ModPoly:
    """``exp(f) mod x^(t+1)`` over F_p in O(t log^2 t) field operations."""
    fc = _prepare(f, t, field)
    if t + 1 > nc.MAX_SIZE:
        raise SizeOverflow(f"t={t} exceeds the largest supported transform")
    field = field.with_cap(t)
    p, pinv, r2 = field.kernel_args()
    wf = _weighted(fc, p, pinv, r2)
    wf_tab = to_table_array(wf, p, pinv, r2)
    nmax = 1 << t.bit_length()  # next power of two >= t + 1
    ctx = convolution_context(max(1, nmax.bit_length() - 1), field)
    g = _exp_dc(wf, wf_tab, field._inv_tab, t, nmax, *ctx)
    return ModPoly(g, field)


def exp_series_naive(f: ModPoly, t: int, field: PrimeField) -> ModPoly:
    """Direct O(t^2) evaluation of the recurrence with Python integers."""
    fc = _prepare(f, t, field)
    p = field.p
    wf = np.array([k * int(fc[k]) % p for k in range(t + 1)], dtype=object)
    g = np.zeros(t + 1, dtype=object)
    g[0] = 1
    for i in range(1, t + 1):
        s = int(np.dot(wf[i:0:-1], g[:i]))
        g[i] = s % p * pow(i, -1, p) % p
    return ModPoly([int(v) for v in g], field)
