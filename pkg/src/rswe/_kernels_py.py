"""Numpy fallback for the hot kernels.

Same interface as the compiled ``rswe._kernels`` extension.  All vectors are
contiguous one-dimensional int64 arrays and all transforms run in place.

The modular transforms exploit linearity: butterflies run exactly in int64
and a single reduction happens at the end.  With canonical inputs (below
2^21) and lengths up to 2^20 the intermediate values stay below 2^42, far
from int64 overflow, so the deferred reduction is exact.
"""

import numpy as np

COMPILED = False


def exp_log_tables(m, poly):
    """Build exp/log tables for GF(2^m) by iterating v <- v*x mod poly.

    Returns (exp, log, order) where order is the multiplicative order of x;
    the caller checks order == 2^m - 1.  Table contents are only meaningful
    when that check passes.
    """
    q = 1 << m
    exp = np.zeros(q - 1, dtype=np.int64)
    log = np.zeros(q, dtype=np.int64)
    v = 1
    order = 0
    for i in range(q - 1):
        exp[i] = v
        log[v] = i
        v <<= 1
        if v & q:
            v ^= poly
        if v == 1:
            order = i + 1
            break
    return exp, log, order


def fwht_exact(a):
    """In-place Walsh transform, exact int64 arithmetic."""
    n = a.shape[0]
    h = 1
    while h < n:
        b = a.reshape(-1, 2, h)
        top = b[:, 0, :].copy()
        b[:, 0, :] += b[:, 1, :]
        np.subtract(top, b[:, 1, :], out=b[:, 1, :])
        h <<= 1


def fwht_mod(a, modulus):
    """In-place Walsh transform with entries reduced to [0, modulus)."""
    fwht_exact(a)
    a %= modulus


def fwht_pow2(a, mask):
    """In-place Walsh transform keeping only the low bits selected by mask."""
    fwht_exact(a)
    a &= mask


def mul_mod(a, b, out, modulus):
    """out = a * b mod modulus, elementwise."""
    np.multiply(a, b, out=out)
    out %= modulus


def fma_mask(acc, a, b, mask):
    """acc = (acc + a * b) & mask, elementwise."""
    acc += a * b
    acc &= mask


def eval_point_batch(cvals, logw, log_t, exp_t, q1, out):
    """XOR-accumulated table product for one evaluation point, many stripes.

    cvals: (B, k) field elements (coefficients per stripe, zeros allowed).
    logw:  (k,) discrete logs of the per-position weights (all nonzero).
    out:   (B,) destination, overwritten with
           XOR_y exp[(log(cvals[s, y]) + logw[y]) mod q1] over nonzero cvals.
    """
    t = log_t[cvals] + logw[np.newaxis, :]
    t %= q1
    vals = exp_t[t]
    vals *= cvals != 0
    np.bitwise_xor.reduce(vals, axis=1, out=out)
