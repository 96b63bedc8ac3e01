"""Walsh transform over length-2^m integer vectors, in three arithmetic modes.

The transform is W[x] = sum_y v[y] * (-1)^popcount(x & y).  Butterflies run
in place with strides 1, 2, ..., 2^(m-1), each stage mapping a pair (top,
bottom) to (top + bottom, top - bottom); that order is fixed and matches the
definition above (the transform is its own transpose, so the stage order only
has to be consistent).

Modes:

* EXACT: plain int64 arithmetic.  Safe from overflow while every input
  magnitude stays at or below 2^(w-m-1) with w = 64.
* MOD_Q_MINUS_1: residues mod q-1 = 2^m - 1, canonical range [0, q-2].
  Because q = 1 mod (q-1) the inverse-transform 1/q factor disappears and
  the transform is an involution.
* MOD_POW2: residues mod 2^(m+1), canonical range [0, 2^(m+1)-1].  Used by
  the parity trick of the evaluation stage: a pre-division value q*v has
  v mod 2 in bit m of its (m+1)-bit residue.
"""

import enum
from dataclasses import dataclass

import numpy as np

from . import backend
from .errors import LengthMismatchError, ModeMismatchError, NotPowerOfTwoError


class Mode(enum.Enum):
    EXACT = "exact"
    MOD_Q_MINUS_1 = "mod-q-minus-1"
    MOD_POW2 = "mod-pow2"


@dataclass
class WalshVector:
    data: np.ndarray
    mode: Mode
    m: int

    @classmethod
    def wrap(cls, values, mode):
        """Copy *values* into a canonical int64 vector of power-of-two length.

        Entries are reduced into the mode's canonical range.
        """
        data = np.array(values, dtype=np.int64)
        if data.ndim != 1:
            raise ValueError("expected a one-dimensional vector")
        n = data.shape[0]
        m = n.bit_length() - 1
        if n == 0 or n != 1 << m:
            raise NotPowerOfTwoError(f"length {n} is not a power of two")
        if mode is Mode.MOD_Q_MINUS_1:
            if m == 0:
                raise NotPowerOfTwoError("mod-(q-1) needs length >= 2")
            data %= (1 << m) - 1
        elif mode is Mode.MOD_POW2:
            data &= (1 << (m + 1)) - 1
        return cls(data=data, mode=mode, m=m)

    def copy(self):
        return WalshVector(data=self.data.copy(), mode=self.mode, m=self.m)


def _check(v):
    n = v.data.shape[0]
    if n == 0 or n != 1 << v.m:
        raise NotPowerOfTwoError(f"length {n} is not a power of two")


def fwht(v):
    """In-place fast Walsh transform of *v* under its mode's arithmetic."""
    _check(v)
    kern = backend.active()
    if v.mode is Mode.EXACT:
        kern.fwht_exact(v.data)
    elif v.mode is Mode.MOD_Q_MINUS_1:
        kern.fwht_mod(v.data, (1 << v.m) - 1)
    else:
        kern.fwht_pow2(v.data, (1 << (v.m + 1)) - 1)
    return v


def fwht_involution_check(v):
    """Transform twice under mod-(q-1) arithmetic and verify the round trip.

    Returns the doubly transformed copy, which equals the input.
    """
    if v.mode is not Mode.MOD_Q_MINUS_1:
        raise ModeMismatchError("involution holds in MOD_Q_MINUS_1 mode only")
    out = fwht(fwht(v.copy()))
    if not np.array_equal(out.data, v.data):
        raise AssertionError("mod-(q-1) Walsh transform failed to invert itself")
    return out


def dyadic_convolution_modq1(a, b):
    """XOR-convolution mod q-1: result[x] = sum_y a[y] * b[x^y] mod (q-1).

    Computed as fwht(fwht(a) * fwht(b)) with all arithmetic mod q-1; the
    involutivity of the modular transform absorbs the 1/q inverse factor.
    Inputs are left untouched.
    """
    if a.mode is not Mode.MOD_Q_MINUS_1 or b.mode is not Mode.MOD_Q_MINUS_1:
        raise ModeMismatchError("convolution operands must be MOD_Q_MINUS_1")
    if a.data.shape[0] != b.data.shape[0]:
        raise LengthMismatchError(
            f"lengths {a.data.shape[0]} != {b.data.shape[0]}"
        )
    _check(a)
    modulus = (1 << a.m) - 1
    kern = backend.active()
    ta = fwht(a.copy())
    tb = fwht(b.copy())
    kern.mul_mod(ta.data, tb.data, ta.data, modulus)
    return fwht(ta)
