"""SEC-DED and SEC-DED-DAEC codes: matrices, codecs, verification, gate models and netlists."""

from .codec import Kind, DecodeOutcome, decode, decode_daec, decode_secded, encode, syndrome
from .complexity import GateCensus, DepthCensus, area, delay
from .gf2 import BitMatrix, BitVector
from .registry import CodeSpec, available, builtin, construct, parity_bound, q_matrix
from .verifier import verify_code

__all__ = [
    "BitMatrix",
    "BitVector",
    "CodeSpec",
    "DecodeOutcome",
    "DepthCensus",
    "GateCensus",
    "Kind",
    "area",
    "available",
    "builtin",
    "construct",
    "decode",
    "decode_daec",
    "decode_secded",
    "delay",
    "encode",
    "parity_bound",
    "q_matrix",
    "syndrome",
    "verify_code",
]
