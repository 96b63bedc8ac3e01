"""Reed-Solomon erasure codec over GF(2^m) built on fast Walsh transforms.

Decoding recovers a full q-point codeword from any k received symbols in
O(q log^2 q): Lagrange coefficients come from one XOR-convolution mod q-1,
and the Lagrange form is evaluated everywhere through mod-2^(m+1) Walsh
transforms of boolean coefficient planes.  Systematic encoding runs the
same machinery on the message positions.
"""

from . import backend, errors
from .codec import CodecParams, decode, encode_systematic, reconstruct
from .core import (
    CoeffVector,
    LogPiVector,
    ReceivedSet,
    TransformStack,
    compute_log_pi,
    evaluate_all,
    evaluate_all_low_memory,
    evaluate_at_points,
    lagrange_coefficients,
    precompute_inverse_stack,
)
from .gf import DEFAULT_POLYNOMIALS, FieldTables, build_field, gf_inv, gf_mul
from .shards import ShardHeader, decode_blobs, encode_bytes
from .walsh import Mode, WalshVector, dyadic_convolution_modq1, fwht, fwht_involution_check

__version__ = "0.1.0"

__all__ = [
    "backend",
    "errors",
    "CodecParams",
    "decode",
    "encode_systematic",
    "reconstruct",
    "CoeffVector",
    "LogPiVector",
    "ReceivedSet",
    "TransformStack",
    "compute_log_pi",
    "evaluate_all",
    "evaluate_all_low_memory",
    "evaluate_at_points",
    "lagrange_coefficients",
    "precompute_inverse_stack",
    "DEFAULT_POLYNOMIALS",
    "FieldTables",
    "build_field",
    "gf_inv",
    "gf_mul",
    "ShardHeader",
    "decode_blobs",
    "encode_bytes",
    "Mode",
    "WalshVector",
    "dyadic_convolution_modq1",
    "fwht",
    "fwht_involution_check",
    "__version__",
]
