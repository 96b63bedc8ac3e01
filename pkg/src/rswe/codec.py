"""Public Reed-Solomon erasure codec: systematic encode, decode, reconstruct.

A codeword stores the first n coordinates of the degree-<k polynomial's
image vector; any k of them recover the message.  Encoding is a decode with
the message placed on positions 0..k-1.  Internally the full q-point vector
is always rebuilt, so n never complicates the algorithm.

Field tables and transform stacks are pooled per (m, poly); concurrent
decodes on distinct stripes each borrow their own stack.
"""

import contextlib
import threading
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import (
    ReceivedSet,
    compute_log_pi,
    evaluate_all,
    evaluate_at_points,
    lagrange_coefficients,
    precompute_inverse_stack,
)
from .errors import (
    BadLengthError,
    BadParamsError,
    DuplicatePointError,
    NotEnoughSymbolsError,
    PositionOutOfRangeError,
)
from .gf import M_MAX, M_MIN, build_field

# Direct per-point evaluation wins while e*k < DIRECT_PATH_FACTOR * q * m,
# e being the erased positions actually needed.  Conservative; tune freely.
DIRECT_PATH_FACTOR = 4


@dataclass(frozen=True)
class CodecParams:
    """m: field degree; k: data symbols per stripe; n: stored symbols."""

    m: int
    k: int
    n: int
    poly: Optional[int] = None

    def __post_init__(self):
        if not M_MIN <= self.m <= M_MAX:
            raise BadParamsError(f"m must be in [{M_MIN}, {M_MAX}]")
        if not 1 <= self.k <= self.n <= (1 << self.m):
            raise BadParamsError(
                f"need 1 <= k <= n <= 2^m, got k={self.k} n={self.n} m={self.m}"
            )


_lock = threading.Lock()
_fields = {}
_stacks = {}


def _field_for(params):
    key = (params.m, params.poly)
    with _lock:
        t = _fields.get(key)
    if t is None:
        t = build_field(params.m, params.poly)
        with _lock:
            t = _fields.setdefault(key, t)
    return t


@contextlib.contextmanager
def _borrowed_stack(t):
    key = (t.m, t.poly)
    with _lock:
        pool = _stacks.setdefault(key, [])
        stack = pool.pop() if pool else None
    if stack is None:
        stack = precompute_inverse_stack(t)
    try:
        yield stack
    finally:
        with _lock:
            _stacks[key].append(stack)


def clear_caches():
    """Drop pooled field tables and transform stacks."""
    with _lock:
        _fields.clear()
        _stacks.clear()


def _parse_received(received, params):
    pairs = list(received)
    if len(pairs) < params.k:
        raise NotEnoughSymbolsError(
            f"got {len(pairs)} symbols, need at least k={params.k}"
        )
    positions = np.array([p for p, _ in pairs], dtype=np.int64)
    symbols = np.array([s for _, s in pairs], dtype=np.int64)
    if positions.min() < 0 or positions.max() >= params.n:
        raise PositionOutOfRangeError(f"positions must lie in [0, {params.n})")
    if len(np.unique(positions)) != len(positions):
        raise DuplicatePointError("duplicate received position")
    return positions, symbols


def _rebuild(rset, needed, upto, t, params):
    """Return coordinates 0..upto-1, recomputing only the erased ones."""
    out = np.zeros(upto, dtype=np.int64)
    inside = rset.positions < upto
    out[rset.positions[inside]] = rset.values[inside]
    if needed.size == 0:
        return out
    logpi = compute_log_pi(rset, t)
    coeffs = lagrange_coefficients(rset, logpi, t)
    if needed.size * params.k < DIRECT_PATH_FACTOR * t.q * t.m:
        out[needed] = evaluate_at_points(coeffs, logpi, needed.tolist(), t)
    else:
        with _borrowed_stack(t) as stack:
            full = evaluate_all(coeffs, logpi, rset, stack, t)
        out[needed] = full[needed]
    return out


def encode_systematic(message, params):
    """Codeword whose first k coordinates are the message itself."""
    msg = np.asarray(message, dtype=np.int64)
    if msg.shape != (params.k,):
        raise BadLengthError(f"message length {msg.size}, expected k={params.k}")
    t = _field_for(params)
    rset = ReceivedSet.build(np.arange(params.k), msg, t.q)
    if params.k == params.n:
        return rset.values.copy()
    needed = np.arange(params.k, params.n, dtype=np.int64)
    return _rebuild(rset, needed, params.n, t, params)


def decode(received, params):
    """Message symbols from any >= k received (position, symbol) pairs."""
    positions, symbols = _parse_received(received, params)
    t = _field_for(params)
    rset = ReceivedSet.build(positions, symbols, t.q)
    needed = np.setdiff1d(
        np.arange(params.k, dtype=np.int64), rset.positions, assume_unique=True
    )
    return _rebuild(rset, needed, params.k, t, params)


def reconstruct(received, params):
    """All n codeword coordinates from any >= k received pairs."""
    positions, symbols = _parse_received(received, params)
    t = _field_for(params)
    rset = ReceivedSet.build(positions, symbols, t.q)
    needed = np.setdiff1d(
        np.arange(params.n, dtype=np.int64), rset.positions, assume_unique=True
    )
    return _rebuild(rset, needed, params.n, t, params)
