# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: Walsh transform butterflies, table construction and
the tight accumulation loops.  Mirrors the interface of ``_kernels_py``."""

import numpy as np

COMPILED = True


def exp_log_tables(int m, long long poly):
    q = 1 << m
    exp_arr = np.zeros(q - 1, dtype=np.int64)
    log_arr = np.zeros(q, dtype=np.int64)
    cdef long long[::1] e = exp_arr
    cdef long long[::1] l = log_arr
    cdef long long v = 1, hi = 1LL << m
    cdef long long i, order = 0
    for i in range(q - 1):
        e[i] = v
        l[v] = i
        v <<= 1
        if v & hi:
            v ^= poly
        if v == 1:
            order = i + 1
            break
    return exp_arr, log_arr, order


def fwht_exact(long long[::1] a):
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t h = 1, i, j
    cdef long long x, y
    while h < n:
        for i in range(0, n, 2 * h):
            for j in range(i, i + h):
                x = a[j]
                y = a[j + h]
                a[j] = x + y
                a[j + h] = x - y
        h <<= 1


def fwht_mod(long long[::1] a, long long modulus):
    # canonical inputs assumed; per-stage conditional subtract keeps
    # every entry in [0, modulus)
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t h = 1, i, j
    cdef long long x, y, s, d
    while h < n:
        for i in range(0, n, 2 * h):
            for j in range(i, i + h):
                x = a[j]
                y = a[j + h]
                s = x + y
                if s >= modulus:
                    s -= modulus
                d = x - y
                if d < 0:
                    d += modulus
                a[j] = s
                a[j + h] = d
        h <<= 1


def fwht_pow2(long long[::1] a, long long mask):
    # exact butterflies, one masking pass at the end: inputs fit in
    # mask < 2^21 and n <= 2^20, so values stay below 2^42
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i
    fwht_exact(a)
    for i in range(n):
        a[i] = a[i] & mask


def mul_mod(long long[::1] a, long long[::1] b, long long[::1] out,
            long long modulus):
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = (a[i] * b[i]) % modulus


def fma_mask(long long[::1] acc, long long[::1] a, long long[::1] b,
             long long mask):
    cdef Py_ssize_t n = acc.shape[0]
    cdef Py_ssize_t i
    for i in range(n):
        acc[i] = (acc[i] + a[i] * b[i]) & mask


def eval_point_batch(long long[:, ::1] cvals, long long[::1] logw,
                     const long long[::1] log_t, const long long[::1] exp_t,
                     long long q1, long long[::1] out):
    cdef Py_ssize_t nb = cvals.shape[0], k = cvals.shape[1], s, y
    cdef long long acc, c, t
    for s in range(nb):
        acc = 0
        for y in range(k):
            c = cvals[s, y]
            if c != 0:
                t = log_t[c] + logw[y]
                if t >= q1:
                    t -= q1
                acc ^= exp_t[t]
        out[s] = acc
