"""Slow reference implementations used as ground truth in tests.

Everything here is deliberately naive: quadratic Lagrange interpolation,
the O(q^2) Walsh transform straight from its definition, Horner encoding
and a shift-and-xor field multiplier that does not touch the log tables.
This module must not import rswe.walsh or rswe.core; tests rely on that
independence.
"""

import numpy as np

from .errors import DuplicatePointError
from .gf import gf_inv, gf_mul


def bitwise_mul(a, b, m, poly):
    """Carry-less multiply then reduce mod poly; no table lookups."""
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        a <<= 1
        b >>= 1
    for bit in range(2 * m - 2, m - 1, -1):
        if acc >> bit & 1:
            acc ^= poly << (bit - m)
    return acc


def naive_interpolate_eval(points, values, x, t):
    """Evaluate the unique degree-<k interpolant at x, textbook O(k^2) sum."""
    if len(set(points)) != len(points):
        raise DuplicatePointError("interpolation points must be distinct")
    acc = 0
    for i, xi in enumerate(points):
        term = values[i]
        for xj in points:
            if xj == xi:
                continue
            term = gf_mul(term, gf_mul(x ^ xj, gf_inv(xi ^ xj, t), t), t)
        acc ^= term
    return acc


def naive_walsh(v):
    """Walsh transform by the double loop, exact Python integers."""
    n = len(v)
    if n == 0 or n & (n - 1):
        raise ValueError(f"length {n} is not a power of two")
    out = []
    for x in range(n):
        s = 0
        for y in range(n):
            if (x & y).bit_count() & 1:
                s -= v[y]
            else:
                s += v[y]
        out.append(s)
    return out


def naive_encode(message, t):
    """Horner-evaluate the coefficient list (constant term first) at all q points."""
    xs = np.arange(t.q, dtype=np.int64)
    acc = np.zeros(t.q, dtype=np.int64)
    q1 = t.q - 1
    for c in reversed(list(message)):
        nz = (acc != 0) & (xs != 0)
        acc = np.where(nz, t.exp[(t.log[acc] + t.log[xs]) % q1], 0)
        acc ^= int(c)
    return acc
