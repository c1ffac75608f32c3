"""Exact multiplication of polynomials over F_p.

Products are computed as exact integer convolutions: the operands are
transformed modulo three internal 62-bit primes (see ``ntt_constants``), the
three cyclic convolutions are recombined with Garner's CRT and only then
reduced modulo p.  Short products go through the schoolbook kernel.
"""

from __future__ import annotations

import operator
import threading
from dataclasses import dataclass

import numpy as np
from numba import njit

from . import ntt_constants as nc
from ._wordops import (
    add_mod,
    fmul,
    montgomery_constants,
    redc,
    sub_mod,
    table_form,
    to_table_array,
)
from .errors import SizeOverflow
from .field import PrimeField

__all__ = [
    "ModPoly",
    "NttPlan",
    "SCHOOLBOOK_CUTOFF",
    "multiply",
    "multiply_lowdeg_schoolbook",
    "multiply_ntt",
    "ntt_forward",
    "ntt_inverse",
    "crt_combine",
]

SCHOOLBOOK_CUTOFF = 64


def _as_residues(values, p: int) -> np.ndarray:
    if isinstance(values, np.ndarray) and values.dtype == np.uint64:
        if values.size and int(values.max()) >= p:
            return values % np.uint64(p)
        return values
    ints = [operator.index(v) % p for v in values]
    return np.array(ints, dtype=np.uint64).reshape(-1)


@dataclass(frozen=True, eq=False)
class ModPoly:
    """Dense polynomial over ``field``; ``coeffs[i]`` is the coefficient of x^i.

    Trailing zeros are allowed and ignored by ``==``.  Anything iterable of
    integers is accepted and reduced modulo p on construction.
    """

    coeffs: np.ndarray
    field: PrimeField

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _as_residues(self.coeffs, self.field.p))

    @classmethod
    def zeros(cls, length: int, field: PrimeField) -> ModPoly:
        return cls(np.zeros(length, dtype=np.uint64), field)

    @classmethod
    def monomial(cls, degree: int, field: PrimeField, coeff: int = 1) -> ModPoly:
        c = np.zeros(degree + 1, dtype=np.uint64)
        c[degree] = coeff % field.p
        return cls(c, field)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return int(self.coeffs[i])

    def tolist(self) -> list[int]:
        return [int(c) for c in self.coeffs]

    def trimmed(self) -> list[int]:
        out = self.tolist()
        while out and out[-1] == 0:
            out.pop()
        return out

    def truncate(self, length: int) -> ModPoly:
        """Reduce modulo ``x^length``, zero-padding if the polynomial is shorter."""
        c = np.zeros(length, dtype=np.uint64)
        k = min(length, len(self.coeffs))
        c[:k] = self.coeffs[:k]
        return ModPoly(c, self.field)

    def _aligned(self, other: ModPoly) -> tuple[np.ndarray, np.ndarray]:
        _check_same_field(self, other)
        n = max(len(self), len(other))
        a = np.zeros(n, dtype=np.uint64)
        b = np.zeros(n, dtype=np.uint64)
        a[: len(self)] = self.coeffs
        b[: len(other)] = other.coeffs
        return a, b

    def __add__(self, other: ModPoly) -> ModPoly:
        a, b = self._aligned(other)
        return ModPoly((a + b) % np.uint64(self.field.p), self.field)

    def __neg__(self) -> ModPoly:
        p = np.uint64(self.field.p)
        return ModPoly((p - self.coeffs) % p, self.field)

    def __sub__(self, other: ModPoly) -> ModPoly:
        return self + (-other)

    def __mul__(self, other: ModPoly) -> ModPoly:
        return multiply(self, other)

    def __eq__(self, other):
        if not isinstance(other, ModPoly):
            return NotImplemented
        return self.field.p == other.field.p and self.trimmed() == other.trimmed()

    def __repr__(self):
        shown = self.tolist()
        if len(shown) > 12:
            body = ", ".join(map(str, shown[:12])) + ", ..."
        else:
            body = ", ".join(map(str, shown))
        return f"ModPoly([{body}], p={self.field.p})"


def _check_same_field(f: ModPoly, g: ModPoly):
    if f.field.p != g.field.p:
        raise ValueError(f"polynomials live over different fields (p={f.field.p} vs p={g.field.p})")


# --------------------------------------------------------------------------
# numba kernels
# --------------------------------------------------------------------------


@njit(cache=True)
def _build_twiddles(root_m, one_m, q, qinv, n):
    """Stacked table: ``tw[h + i] = w_{2h}^i`` (Montgomery form) for every power of two ``h < n``."""
    tw = np.zeros(n, dtype=np.uint64)
    w = root_m
    h = n // 2
    while h >= 1:
        cur = one_m
        for i in range(h):
            tw[h + i] = cur
            cur = redc(cur, w, q, qinv)
        w = redc(w, w, q, qinv)
        h //= 2
    return tw


@njit(cache=True)
def _dif(a, tw, q, qinv):
    """In-place forward transform, natural order in, bit-reversed order out."""
    n = a.shape[0]
    h = n // 2
    while h >= 1:
        for s in range(0, n, 2 * h):
            for i in range(h):
                u = a[s + i]
                v = a[s + i + h]
                a[s + i] = add_mod(u, v, q)
                a[s + i + h] = redc(sub_mod(u, v, q), tw[h + i], q, qinv)
        h //= 2


@njit(cache=True)
def _dit(a, itw, q, qinv):
    """In-place unscaled inverse transform, bit-reversed order in, natural order out."""
    n = a.shape[0]
    h = 1
    while h < n:
        for s in range(0, n, 2 * h):
            for i in range(h):
                u = a[s + i]
                v = redc(a[s + i + h], itw[h + i], q, qinv)
                a[s + i] = add_mod(u, v, q)
                a[s + i + h] = sub_mod(u, v, q)
        h *= 2


@njit(cache=True)
def _scale(a, factor, q, qinv, r2):
    """Multiply every entry by ``factor`` (a plain residue)."""
    f = redc(factor, r2, q, qinv)
    for i in range(a.shape[0]):
        a[i] = redc(a[i], f, q, qinv)


@njit(cache=True)
def _load(src, start, count, n, q):
    a = np.zeros(n, dtype=np.uint64)
    for i in range(count):
        a[i] = src[start + i] % q
    return a


@njit(cache=True)
def _pointwise_inverse(a, b_hat, itw, q, qinv, r2):
    """``a <- INTT(a * b_hat)``.  The pointwise REDC leaves a factor R^-1 that
    the final scaling by ``n^-1 * R`` removes."""
    n = a.shape[0]
    for i in range(n):
        a[i] = redc(a[i], b_hat[i], q, qinv)
    _dit(a, itw, q, qinv)
    inv_n = q - (q - np.uint64(1)) // np.uint64(n)
    _scale(a, redc(inv_n, r2, q, qinv), q, qinv, r2)


@njit(cache=True)
def _garner(c0, c1, c2, lo, hi, out, out_off, qs, qinvs, gk, p, pinv, d_tab, e_tab):
    """CRT-recombine ``c*[lo:hi]`` into exact integers and add them mod p into ``out[out_off:]``."""
    q1 = qs[1]
    q2 = qs[2]
    qi1 = qinvs[1]
    qi2 = qinvs[2]
    for i in range(lo, hi):
        x1 = c0[i]
        x2 = redc(sub_mod(c1[i], x1 % q1, q1), gk[0], q1, qi1)
        t = sub_mod(c2[i], x1 % q2, q2)
        t = sub_mod(t, redc(x2 % q2, gk[1], q2, qi2), q2)
        x3 = redc(t, gk[2], q2, qi2)
        v = add_mod(x1 % p, fmul(x2 % p, d_tab, p, pinv), p)
        v = add_mod(v, fmul(x3 % p, e_tab, p, pinv), p)
        k = out_off + i - lo
        out[k] = add_mod(out[k], v, p)


@njit(cache=True)
def _convolve(f, g, n, tw, itw, qs, qinvs, r2s, gk, p, pinv, d_tab, e_tab):
    lf = f.shape[0]
    lg = g.shape[0]
    out_len = lf + lg - 1
    res = np.empty((3, n), dtype=np.uint64)
    for k in range(3):
        q = qs[k]
        a = _load(f, 0, lf, n, q)
        b = _load(g, 0, lg, n, q)
        _dif(a, tw[k, :n], q, qinvs[k])
        _dif(b, tw[k, :n], q, qinvs[k])
        _pointwise_inverse(a, b, itw[k, :n], q, qinvs[k], r2s[k])
        res[k] = a
    out = np.zeros(out_len, dtype=np.uint64)
    _garner(res[0], res[1], res[2], 0, out_len, out, 0, qs, qinvs, gk, p, pinv, d_tab, e_tab)
    return out


@njit(cache=True)
def _schoolbook(f, g_tab, p, pinv):
    out = np.zeros(f.shape[0] + g_tab.shape[0] - 1, dtype=np.uint64)
    for i in range(f.shape[0]):
        fi = f[i]
        if fi == 0:
            continue
        for j in range(g_tab.shape[0]):
            out[i + j] = add_mod(out[i + j], fmul(fi, g_tab[j], p, pinv), p)
    return out


# --------------------------------------------------------------------------
# transform context
# --------------------------------------------------------------------------


def _mont(x: int, q: int) -> int:
    return (x << 64) % q


_QS = np.array(nc.NTT_PRIMES, dtype=np.uint64)
_MCONST = [montgomery_constants(q) for q in nc.NTT_PRIMES]
_QINVS = np.array([c[0] for c in _MCONST], dtype=np.uint64)
_R2S = np.array([c[1] for c in _MCONST], dtype=np.uint64)


def _garner_constants() -> np.ndarray:
    q0, q1, q2 = nc.NTT_PRIMES
    return np.array(
        [
            _mont(pow(q0, -1, q1), q1),
            _mont(q0 % q2, q2),
            _mont(pow(q0 * q1, -1, q2), q2),
        ],
        dtype=np.uint64,
    )


_GK = _garner_constants()

_table_lock = threading.Lock()
_tables: dict[str, object] = {"log": -1, "tw": None, "itw": None}


def _twiddle_tables(log_n: int) -> tuple[np.ndarray, np.ndarray]:
    """Forward/inverse twiddle tables of shape ``(3, >= 2**log_n)``.

    Entries for smaller sizes are prefixes of larger tables, so only the
    largest table requested so far is kept.
    """
    with _table_lock:
        if _tables["log"] < log_n:
            n = 1 << log_n
            tw = np.empty((3, n), dtype=np.uint64)
            itw = np.empty((3, n), dtype=np.uint64)
            for k, (q, root) in enumerate(zip(nc.NTT_PRIMES, nc.ROOTS)):
                qinv = int(_QINVS[k])
                w = pow(root, 1 << (nc.MAX_LOG_SIZE - log_n), q)
                one = _mont(1, q)
                tw[k] = _build_twiddles(np.uint64(_mont(w, q)), np.uint64(one), np.uint64(q), np.uint64(qinv), n)
                itw[k] = _build_twiddles(
                    np.uint64(_mont(pow(w, -1, q), q)), np.uint64(one), np.uint64(q), np.uint64(qinv), n
                )
            _tables.update(log=log_n, tw=tw, itw=itw)
        return _tables["tw"], _tables["itw"]


@dataclass(frozen=True)
class NttPlan:
    """Transform size and per-modulus roots for one convolution length."""

    size: int
    moduli: tuple[int, int, int] = nc.NTT_PRIMES
    roots: tuple[int, int, int] = ()

    @classmethod
    def for_length(cls, length: int) -> NttPlan:
        if length < 1:
            raise ValueError("convolution length must be positive")
        size = 1 << (length - 1).bit_length()
        if size > nc.MAX_SIZE:
            raise SizeOverflow(f"output length {length} needs a transform of size {size} > {nc.MAX_SIZE}")
        log = size.bit_length() - 1
        roots = tuple(pow(r, 1 << (nc.MAX_LOG_SIZE - log), q) for q, r in zip(nc.NTT_PRIMES, nc.ROOTS))
        return cls(size=size, roots=roots)

    @property
    def log_size(self) -> int:
        return self.size.bit_length() - 1

    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        return _twiddle_tables(self.log_size)


def field_crt_args(field: PrimeField):
    """Field-dependent constants for ``_garner``: ``(q0 mod p, q0*q1 mod p)`` in table form."""
    q0, q1, _ = nc.NTT_PRIMES
    return np.uint64(table_form(q0, field.p)), np.uint64(table_form(q0 * q1, field.p))


def convolution_context(log_n: int, field: PrimeField):
    """Everything the numba convolution kernels need, as one tuple."""
    tw, itw = _twiddle_tables(log_n)
    p, pinv, _ = field.kernel_args()
    d_tab, e_tab = field_crt_args(field)
    return tw, itw, _QS, _QINVS, _R2S, _GK, p, pinv, d_tab, e_tab


# --------------------------------------------------------------------------
# public API
# --------------------------------------------------------------------------


def multiply_lowdeg_schoolbook(f: ModPoly, g: ModPoly) -> ModPoly:
    """Quadratic-time product; same contract as ``multiply``."""
    _check_same_field(f, g)
    field = f.field
    if len(f) == 0 or len(g) == 0:
        return ModPoly.zeros(0, field)
    p, pinv, r2 = field.kernel_args()
    g_tab = to_table_array(g.coeffs, p, pinv, r2)
    return ModPoly(_schoolbook(f.coeffs, g_tab, p, pinv), field)


def multiply(f: ModPoly, g: ModPoly) -> ModPoly:
    """Full product ``f * g`` with coefficients reduced mod p.

    The result has length ``len(f) + len(g) - 1``.
    """
    _check_same_field(f, g)
    if len(f) + len(g) - 1 < SCHOOLBOOK_CUTOFF:
        return multiply_lowdeg_schoolbook(f, g)
    return multiply_ntt(f, g)


def multiply_ntt(f: ModPoly, g: ModPoly) -> ModPoly:
    """``multiply`` forced through the transform path, whatever the size."""
    _check_same_field(f, g)
    if len(f) == 0 or len(g) == 0:
        return ModPoly.zeros(0, f.field)
    out_len = len(f) + len(g) - 1
    plan = NttPlan.for_length(out_len)
    ctx = convolution_context(plan.log_size, f.field)
    return ModPoly(_convolve(f.coeffs, g.coeffs, plan.size, *ctx), f.field)


def _bit_reversal(n: int) -> np.ndarray:
    rev = np.zeros(1, dtype=np.int64)
    while len(rev) < n:
        rev = np.concatenate([2 * rev, 2 * rev + 1])
    return rev


def _transform_setup(values, modulus: int, root: int):
    a = _as_residues(values, modulus).copy()
    n = len(a)
    if n == 0 or n & (n - 1):
        raise ValueError(f"transform length must be a power of two, got {n}")
    qinv, r2 = montgomery_constants(modulus)
    return a, n, np.uint64(modulus), np.uint64(qinv), np.uint64(r2)


def ntt_forward(values, modulus: int, root: int) -> np.ndarray:
    """``out[k] = sum_j values[j] * root^(j*k) mod modulus``.

    ``root`` must be a primitive ``len(values)``-th root of unity; the output
    is in natural order.
    """
    a, n, q, qinv, _ = _transform_setup(values, modulus, root)
    tw = _build_twiddles(np.uint64(_mont(root, modulus)), np.uint64(_mont(1, modulus)), q, qinv, n)
    _dif(a, tw, q, qinv)
    return a[_bit_reversal(n)]


def ntt_inverse(values, modulus: int, root: int) -> np.ndarray:
    """Inverse of ``ntt_forward`` for the same ``root``."""
    a, n, q, qinv, r2 = _transform_setup(values, modulus, root)
    iroot = pow(root, -1, modulus)
    itw = _build_twiddles(np.uint64(_mont(iroot, modulus)), np.uint64(_mont(1, modulus)), q, qinv, n)
    a = np.ascontiguousarray(a[_bit_reversal(n)])
    _dit(a, itw, q, qinv)
    _scale(a, np.uint64(pow(n, -1, modulus)), q, qinv, r2)
    return a


def crt_combine(r1: int, r2: int, r3: int, field: PrimeField | None = None) -> int:
    """Recombine residues modulo the three internal primes.

    Without ``field`` the unique integer in ``[0, q1*q2*q3)`` is returned;
    with a field, the same integer reduced modulo ``field.p`` (computed by the
    word-sized kernel used inside ``multiply``).
    """
    q0, q1, q2 = nc.NTT_PRIMES
    r = [operator.index(r1) % q0, operator.index(r2) % q1, operator.index(r3) % q2]
    if field is None:
        x2 = (r[1] - r[0]) * pow(q0, -1, q1) % q1
        x3 = (r[2] - r[0] - x2 * q0) * pow(q0 * q1, -1, q2) % q2
        return r[0] + x2 * q0 + x3 * q0 * q1
    cs = [np.array([v], dtype=np.uint64) for v in r]
    out = np.zeros(1, dtype=np.uint64)
    p, pinv, _ = field.kernel_args()
    d_tab, e_tab = field_crt_args(field)
    _garner(cs[0], cs[1], cs[2], 0, 1, out, 0, _QS, _QINVS, _GK, p, pinv, d_tab, e_tab)
    return int(out[0])
