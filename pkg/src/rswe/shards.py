"""On-disk shard format and the file-level stripe codec.

Shard layout: a fixed 30-byte header followed by one symbol per stripe,
little-endian, m/8 bytes each.

    magic        4 bytes  b"RSWE"
    version      u8       1
    m            u8       8 or 16
    k            u32 LE   data symbols per stripe
    n            u32 LE   total symbols per stripe
    index        u32 LE   codeword coordinate stored in this shard
    file_len     u64 LE   original file length in bytes
    stripe_count u32 LE   ceil(file_len / (k * m/8))

Every stripe of a file shares the same received-position set, so the
log-Pi stage runs once per file and only the per-stripe coefficient and
evaluation work repeats.  Results are bit-identical to calling the
single-stripe codec API stripe by stripe.
"""

import math
import struct
from dataclasses import dataclass

import numpy as np

from . import backend
from .codec import DIRECT_PATH_FACTOR
from .core import (
    CoeffVector,
    ReceivedSet,
    compute_log_pi,
    evaluate_all,
    precompute_inverse_stack,
)
from .errors import (
    BadParamsError,
    CorruptHeaderError,
    HeaderMismatchError,
    NotEnoughShardsError,
)
from .gf import build_field

MAGIC = b"RSWE"
VERSION = 1
_HEADER = struct.Struct("<4sBBIIIQI")
HEADER_SIZE = _HEADER.size


@dataclass(frozen=True)
class ShardHeader:
    m: int
    k: int
    n: int
    index: int
    file_len: int
    stripe_count: int

    def pack(self):
        return _HEADER.pack(
            MAGIC, VERSION, self.m, self.k, self.n, self.index,
            self.file_len, self.stripe_count,
        )

    @classmethod
    def parse(cls, buf):
        if len(buf) < HEADER_SIZE:
            raise CorruptHeaderError("shard shorter than the header")
        magic, version, m, k, n, index, file_len, stripe_count = _HEADER.unpack(
            buf[:HEADER_SIZE]
        )
        if magic != MAGIC:
            raise CorruptHeaderError(f"bad magic {magic!r}")
        if version != VERSION:
            raise CorruptHeaderError(f"unsupported version {version}")
        if m not in (8, 16):
            raise CorruptHeaderError(f"unsupported field degree m={m}")
        if not 1 <= k <= n <= (1 << m):
            raise CorruptHeaderError(f"bad parameters k={k} n={n} m={m}")
        if index >= n:
            raise CorruptHeaderError(f"shard index {index} outside n={n}")
        if stripe_count != _stripes_for(file_len, k, m):
            raise CorruptHeaderError("stripe count disagrees with file length")
        return cls(m=m, k=k, n=n, index=index,
                   file_len=file_len, stripe_count=stripe_count)


def _stripes_for(file_len, k, m):
    return math.ceil(file_len / (k * (m // 8))) if file_len else 0


def _symbol_dtype(m):
    return np.dtype("<u1") if m == 8 else np.dtype("<u2")


class _StripeBatch:
    """Shared-received-set decoder for many stripes at once."""

    def __init__(self, m, received_positions, k):
        self.t = build_field(m)
        self.k = k
        q = self.t.q
        self.rset = ReceivedSet.build(
            received_positions, np.zeros(len(received_positions), np.int64), q
        )
        self.logpi = compute_log_pi(self.rset, self.t)

    def coefficients(self, values):
        """Batched Lagrange coefficients; values is (stripes, |R|)."""
        t, q1 = self.t, self.t.q - 1
        inv_log = (q1 - self.logpi.logpi[self.rset.positions]) % q1
        logs = (t.log[values] + inv_log[np.newaxis, :]) % q1
        coeffs = t.exp[logs]
        coeffs *= values != 0
        return np.ascontiguousarray(coeffs)

    def evaluate(self, values, coeffs, points):
        """Codeword symbols at *points* for every stripe; (stripes, |points|)."""
        t, q1 = self.t, self.t.q - 1
        nb = values.shape[0]
        out = np.empty((nb, len(points)), dtype=np.int64)
        if nb == 0 or not points:
            return out
        if len(points) * self.k < DIRECT_PATH_FACTOR * t.q * t.m:
            kern = backend.active()
            col = np.empty(nb, dtype=np.int64)
            for c, x in enumerate(points):
                log_w = (q1 - t.log[x ^ self.rset.positions]) % q1
                kern.eval_point_batch(coeffs, log_w, t.log, t.exp, q1, col)
                nz = col != 0
                out[nz, c] = t.exp[(int(self.logpi.logpi[x]) + t.log[col[nz]]) % q1]
                out[~nz, c] = 0
        else:
            stack = precompute_inverse_stack(self.t)
            cq = np.zeros(t.q, dtype=np.int64)
            pts = np.asarray(points, dtype=np.int64)
            for s in range(nb):
                rs = ReceivedSet(self.rset.positions, values[s], self.rset.indicator)
                cq[self.rset.positions] = coeffs[s]
                full = evaluate_all(CoeffVector(cq, rs), self.logpi, rs, stack, t)
                out[s] = full[pts]
        return out


def encode_bytes(data, m, k, n):
    """Split *data* into n shard blobs, any k of which rebuild it."""
    if m not in (8, 16):
        raise BadParamsError("the shard format supports m=8 and m=16 only")
    if not 1 <= k <= n <= (1 << m):
        raise BadParamsError(f"need 1 <= k <= n <= 2^m, got k={k} n={n} m={m}")
    sym = m // 8
    stripe_count = _stripes_for(len(data), k, m)
    padded = data.ljust(stripe_count * k * sym, b"\0")
    message = (
        np.frombuffer(padded, dtype=_symbol_dtype(m))
        .astype(np.int64)
        .reshape(stripe_count, k)
    )

    batch = _StripeBatch(m, np.arange(k, dtype=np.int64), k)
    parity = batch.evaluate(
        message, batch.coefficients(message), list(range(k, n))
    )

    shards = []
    for j in range(n):
        header = ShardHeader(m=m, k=k, n=n, index=j,
                             file_len=len(data), stripe_count=stripe_count)
        column = message[:, j] if j < k else parity[:, j - k]
        shards.append(header.pack() + column.astype(_symbol_dtype(m)).tobytes())
    return shards


def decode_blobs(blobs):
    """Rebuild the original bytes from any k consistent shard blobs."""
    if not blobs:
        raise NotEnoughShardsError("no shards supplied")
    headers = [ShardHeader.parse(b) for b in blobs]
    first = headers[0]
    for h in headers[1:]:
        if (h.m, h.k, h.n, h.file_len, h.stripe_count) != (
            first.m, first.k, first.n, first.file_len, first.stripe_count,
        ):
            raise HeaderMismatchError("shards come from different encodings")
    indexes = [h.index for h in headers]
    if len(set(indexes)) != len(indexes):
        raise HeaderMismatchError("duplicate shard index")
    if len(blobs) < first.k:
        raise NotEnoughShardsError(
            f"got {len(blobs)} shards, need at least k={first.k}"
        )

    m, k, sym = first.m, first.k, first.m // 8
    payload_len = first.stripe_count * sym
    dtype = _symbol_dtype(m)
    order = np.argsort(indexes)
    positions = np.asarray(indexes, dtype=np.int64)[order]
    values = np.empty((first.stripe_count, len(blobs)), dtype=np.int64)
    for col, idx in enumerate(order):
        body = blobs[idx][HEADER_SIZE:]
        if len(body) != payload_len:
            raise CorruptHeaderError(
                f"shard {indexes[idx]} payload is {len(body)} bytes, "
                f"expected {payload_len}"
            )
        values[:, col] = np.frombuffer(body, dtype=dtype).astype(np.int64)

    message = np.empty((first.stripe_count, k), dtype=np.int64)
    inside = positions < k
    message[:, positions[inside]] = values[:, inside]
    missing = np.setdiff1d(np.arange(k, dtype=np.int64), positions,
                           assume_unique=True)
    if missing.size:
        batch = _StripeBatch(m, positions, k)
        message[:, missing] = batch.evaluate(
            values, batch.coefficients(values), missing.tolist()
        )
    return message.astype(dtype).tobytes()[: first.file_len]
