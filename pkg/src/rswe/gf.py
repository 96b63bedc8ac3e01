"""Arithmetic in GF(2^m), 2 <= m <= 20.

Field elements are integers below q = 2^m: the integer's bit i is the
coefficient of x^i in the residue polynomial, so lexicographic point order
equals ascending integer order and alpha = x is represented by 2.  exp/log
tables are built by repeated multiplication by alpha and the build fails
unless alpha generates the whole multiplicative group, which also proves
the modulus primitive.
"""

from dataclasses import dataclass, field

import numpy as np

from . import backend
from .errors import BadDegreeError, NotPrimitiveError

# Lowest-weight primitive polynomials (x^m term included, constant term 1).
DEFAULT_POLYNOMIALS = {
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
    16: 0x1100B,
    17: 0x20009,
    18: 0x40081,
    19: 0x80027,
    20: 0x100009,
}

M_MIN = 2
M_MAX = 20


@dataclass(eq=False)
class FieldTables:
    """Immutable log/exp tables for one field; share freely across threads."""

    m: int
    q: int
    poly: int
    exp: np.ndarray  # length q-1, exp[i] = alpha^i
    log: np.ndarray  # length q, log[alpha^i] = i, log[0] = 0

    @property
    def logL(self):
        """Image vector of the extended discrete log, indexed by point."""
        return self.log


def build_field(m, poly=None):
    """Build GF(2^m) tables, verifying that alpha = x has order q - 1."""
    if not M_MIN <= m <= M_MAX:
        raise ValueError(f"m must be in [{M_MIN}, {M_MAX}], got {m}")
    if poly is None:
        poly = DEFAULT_POLYNOMIALS[m]
    if poly.bit_length() - 1 != m:
        raise BadDegreeError(
            f"polynomial {poly:#x} has degree {poly.bit_length() - 1}, need {m}"
        )
    q = 1 << m
    exp, log, order = backend.active().exp_log_tables(m, poly)
    if order != q - 1:
        raise NotPrimitiveError(
            f"x has order {order or 'undefined'} mod {poly:#x}, need {q - 1}"
        )
    exp.setflags(write=False)
    log.setflags(write=False)
    return FieldTables(m=m, q=q, poly=poly, exp=exp, log=log)


def gf_mul(a, b, t):
    """Product in GF(2^m); zero absorbs."""
    if a == 0 or b == 0:
        return 0
    return int(t.exp[(int(t.log[a]) + int(t.log[b])) % (t.q - 1)])


def gf_inv(a, t):
    """Multiplicative inverse, with 0 mapped to 0."""
    if a == 0:
        return 0
    return int(t.exp[(t.q - 1 - int(t.log[a])) % (t.q - 1)])
