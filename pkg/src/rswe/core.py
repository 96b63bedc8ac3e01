"""Erasure-decoding core: Lagrange coefficients and full-field evaluation.

The decoder works on the image vector of the codeword polynomial over all
q = 2^m field points.  Two stages:

1. compute_log_pi: the log of Pi(x) = prod_{y in R, y != x} (x ^ y) at every
   point, obtained as the XOR-convolution of the received-position indicator
   with the discrete-log image vector, everything mod q-1.  Cost O(q log q).
2. evaluate_all: P(x) = Pi(x) * XOR_y C(y) * inv(x ^ y) for x outside R.
   The field-valued convolution is decomposed over the basis alpha^i into
   boolean planes; each plane pair contributes a parity bit recovered from
   bit m of a mod-2^(m+1) Walsh transform.  Grouping plane pairs by s = i+j
   costs 3m-1 transforms, O(q log^2 q) total.

A low-memory variant redoes the plane transforms per (i, j) pair in O(q)
working memory, and a direct per-point path covers the few-erasures case.
"""

import weakref
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import backend
from .errors import (
    DuplicatePointError,
    EmptyReceivedSetError,
    FieldMismatchError,
    LengthMismatchError,
    PointInReceivedSetError,
    PositionOutOfRangeError,
    SymbolOutOfRangeError,
)


@dataclass
class ReceivedSet:
    """Received positions (sorted), their symbols, and the 0/1 indicator."""

    positions: np.ndarray
    values: np.ndarray
    indicator: np.ndarray

    @classmethod
    def build(cls, positions, values, q):
        pos = np.asarray(positions, dtype=np.int64)
        val = np.asarray(values, dtype=np.int64)
        if pos.shape != val.shape:
            raise LengthMismatchError("positions and values differ in length")
        if pos.size and (pos.min() < 0 or pos.max() >= q):
            raise PositionOutOfRangeError(f"positions must lie in [0, {q})")
        if val.size and (val.min() < 0 or val.max() >= q):
            raise SymbolOutOfRangeError(f"symbols must lie in [0, {q})")
        order = np.argsort(pos)
        pos = pos[order]
        val = val[order]
        if pos.size > 1 and np.any(pos[1:] == pos[:-1]):
            raise DuplicatePointError("received positions must be distinct")
        indicator = np.zeros(q, dtype=np.int64)
        indicator[pos] = 1
        return cls(positions=pos, values=val, indicator=indicator)


@dataclass
class LogPiVector:
    """logpi[x] = L(Pi(x)) mod (q-1); exp[logpi[x]] recovers Pi(x) exactly."""

    logpi: np.ndarray


@dataclass
class CoeffVector:
    """Lagrange coefficients as a q-vector, zero off the received set.

    Keeps a reference to its ReceivedSet so the direct evaluation path can
    reject points that were received (zero coefficients alone cannot tell).
    """

    coeffs: np.ndarray
    received: ReceivedSet


@dataclass
class TransformStack:
    """Per-field precomputed transforms plus per-decode scratch.

    ihat[j] holds the mod-2^(m+1) Walsh transform of bit plane j of the
    inverse image vector; chat is scratch reused across decodes.  One stack
    serves one decode at a time; build one per worker for concurrency.
    """

    m: int
    poly: int
    ihat: np.ndarray
    basis: np.ndarray
    chat: Optional[np.ndarray] = None


_lhat_cache = weakref.WeakKeyDictionary()


def _lhat(t):
    """Mod-(q-1) Walsh transform of the discrete-log vector, cached per field."""
    arr = _lhat_cache.get(t)
    if arr is None:
        arr = t.log.copy()
        backend.active().fwht_mod(arr, t.q - 1)
        _lhat_cache[t] = arr
    return arr


def compute_log_pi(r, t):
    """Convolve the received indicator with [L] mod q-1; O(q log q)."""
    if r.positions.size == 0:
        raise EmptyReceivedSetError("need at least one received position")
    q1 = t.q - 1
    kern = backend.active()
    work = r.indicator.copy()
    kern.fwht_mod(work, q1)
    kern.mul_mod(work, _lhat(t), work, q1)
    kern.fwht_mod(work, q1)
    return LogPiVector(logpi=work)


def lagrange_coefficients(r, logpi, t):
    """c_x = P(x) / Pi(x) on the received set, zero elsewhere."""
    q1 = t.q - 1
    coeffs = np.zeros(t.q, dtype=np.int64)
    pos = r.positions
    nz = r.values != 0
    vals = r.values[nz]
    inv_log = (q1 - logpi.logpi[pos[nz]]) % q1
    coeffs[pos[nz]] = t.exp[(t.log[vals] + inv_log) % q1]
    return CoeffVector(coeffs=coeffs, received=r)


def precompute_inverse_stack(t):
    """Transform the m bit planes of the inverse image vector; once per field."""
    kern = backend.active()
    q, m = t.q, t.m
    q1 = q - 1
    mask = (1 << (m + 1)) - 1
    inv_img = np.zeros(q, dtype=np.int64)
    inv_img[1:] = t.exp[(q1 - t.log[np.arange(1, q)]) % q1]
    ihat = np.empty((m, q), dtype=np.int64)
    for j in range(m):
        np.right_shift(inv_img, j, out=ihat[j])
        ihat[j] &= 1
        kern.fwht_pow2(ihat[j], mask)
    return TransformStack(m=m, poly=t.poly, ihat=ihat, basis=t.exp[:m].copy())


def _check_stack(stack, t):
    if stack.m != t.m or stack.poly != t.poly:
        raise FieldMismatchError(
            f"stack built for m={stack.m} poly={stack.poly:#x}, "
            f"field is m={t.m} poly={t.poly:#x}"
        )


def _combine(acc, logpi, r, t):
    """out = Pi(x) * acc(x) off the received set, received values on it."""
    q1 = t.q - 1
    out = np.zeros(t.q, dtype=np.int64)
    nz = acc != 0
    out[nz] = t.exp[(logpi.logpi[nz] + t.log[acc[nz]]) % q1]
    out[r.positions] = r.values
    return out


def evaluate_all(c, logpi, r, stack, t):
    """Evaluate the Lagrange form at every field point; O(q log^2 q).

    Bit planes of the coefficient vector are transformed once (m transforms),
    then for each s = i + j one accumulated plane product is transformed back
    and its bit-m parity contributes alpha^s; 3m - 1 transforms in total.
    """
    _check_stack(stack, t)
    kern = backend.active()
    q, m = t.q, t.m
    q1 = q - 1
    mask = (1 << (m + 1)) - 1

    if stack.chat is None or stack.chat.shape != (m, q):
        stack.chat = np.empty((m, q), dtype=np.int64)
    chat = stack.chat
    for i in range(m):
        np.right_shift(c.coeffs, i, out=chat[i])
        chat[i] &= 1
        kern.fwht_pow2(chat[i], mask)

    acc = np.zeros(q, dtype=np.int64)
    plane = np.empty(q, dtype=np.int64)
    for s in range(2 * m - 1):
        plane[:] = 0
        for i in range(max(0, s - m + 1), min(s, m - 1) + 1):
            kern.fma_mask(plane, chat[i], stack.ihat[s - i], mask)
        kern.fwht_pow2(plane, mask)
        # the exact pre-division value is q * conv_s(x); bit m of its
        # (m+1)-bit residue is conv_s(x) mod 2
        np.right_shift(plane, m, out=plane)
        plane &= 1
        plane *= int(t.exp[s])
        acc ^= plane
    return _combine(acc, logpi, r, t)


def evaluate_all_low_memory(c, logpi, r, t):
    """Same output as evaluate_all with O(q) scratch; O(q log^3 q) time.

    No precomputed stack: plane transforms are redone for every (i, j) pair,
    using three length-q buffers beyond the accumulator.
    """
    kern = backend.active()
    q, m = t.q, t.m
    q1 = q - 1
    mask = (1 << (m + 1)) - 1
    pow2 = mask + 1

    inv_img = np.zeros(q, dtype=np.int64)
    inv_img[1:] = t.exp[(q1 - t.log[np.arange(1, q)]) % q1]

    acc = np.zeros(q, dtype=np.int64)
    buf_c = np.empty(q, dtype=np.int64)
    buf_t = np.empty(q, dtype=np.int64)
    for i in range(m):
        np.right_shift(c.coeffs, i, out=buf_c)
        buf_c &= 1
        kern.fwht_pow2(buf_c, mask)
        for j in range(m):
            np.right_shift(inv_img, j, out=buf_t)
            buf_t &= 1
            kern.fwht_pow2(buf_t, mask)
            kern.mul_mod(buf_c, buf_t, buf_t, pow2)
            kern.fwht_pow2(buf_t, mask)
            np.right_shift(buf_t, m, out=buf_t)
            buf_t &= 1
            buf_t *= int(t.exp[(i + j) % q1])
            acc ^= buf_t
    return _combine(acc, logpi, r, t)


def evaluate_at_points(c, logpi, pts, t):
    """Evaluate the Lagrange form at chosen points only; O(|R|) per point."""
    q1 = t.q - 1
    received = c.received
    pos = received.positions
    cv = c.coeffs[pos]
    nz = cv != 0
    log_c = t.log[cv[nz]]
    pos_nz = pos[nz]
    out = []
    for x in pts:
        x = int(x)
        if not 0 <= x < t.q:
            raise PositionOutOfRangeError(f"point {x} outside the field")
        if received.indicator[x]:
            raise PointInReceivedSetError(f"point {x} was received")
        log_w = (q1 - t.log[x ^ pos_nz]) % q1
        acc = int(np.bitwise_xor.reduce(t.exp[(log_c + log_w) % q1])) if log_c.size else 0
        if acc == 0:
            out.append(0)
        else:
            out.append(int(t.exp[(int(logpi.logpi[x]) + int(t.log[acc])) % q1]))
    return out
