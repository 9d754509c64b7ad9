"""Systematic encoder and syndrome decoders (SEC-DED and SEC-DED-DAEC).

Error positions in outcomes are 1-based, matching ``d1..dk, p1..p(n-k)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .gf2 import BitVector, DimensionError, mat_vec_mul
from .registry import CodeSpec


class MalformedCodeError(ValueError):
    """A syndrome is ambiguous between a single column and a pair signature."""


class Kind(enum.IntEnum):
    NO_ERROR = 0
    SINGLE_CORRECTED = 1
    ADJACENT_CORRECTED = 2
    DETECTED_UNCORRECTABLE = 3


MODES = ("secded", "daec")


@dataclass(frozen=True)
class DecodeOutcome:
    kind: Kind
    syndrome: BitVector
    position: int | None = None
    corrected: BitVector | None = None
    data: BitVector | None = None

    @property
    def correctable(self) -> bool:
        return self.kind != Kind.DETECTED_UNCORRECTABLE

    def flipped(self) -> tuple[int, ...]:
        """1-based positions the decoder flipped."""
        if self.kind == Kind.SINGLE_CORRECTED:
            return (self.position,)
        if self.kind == Kind.ADJACENT_CORRECTED:
            return (self.position, self.position + 1)
        return ()


def _check_len(spec: CodeSpec, v: BitVector, expected: int, what: str):
    if len(v) != expected:
        raise DimensionError(f"{what} has length {len(v)}, code {spec.name} needs {expected}")


def encode(spec: CodeSpec, data: BitVector) -> BitVector:
    """Append check bits: ``c_i`` is the XOR of the data bits selected by row ``i``."""
    _check_len(spec, data, spec.k, "data word")
    checks = mat_vec_mul(spec.data_matrix(), data)
    return BitVector.from_int(data.to_int() | (checks.to_int() << spec.k), spec.n)


def syndrome(spec: CodeSpec, received: BitVector) -> BitVector:
    _check_len(spec, received, spec.n, "received word")
    return mat_vec_mul(spec.h, received)


def extract_data(spec: CodeSpec, word: BitVector) -> BitVector:
    return BitVector.from_int(word.to_int() & ((1 << spec.k) - 1), spec.k)


@lru_cache(maxsize=64)
def _lookups(spec: CodeSpec):
    singles: dict[int, list[int]] = {}
    for j, c in enumerate(spec.column_ints):
        singles.setdefault(c, []).append(j)
    pairs: dict[int, list[int]] = {}
    for j, s in enumerate(spec.pair_signatures):
        pairs.setdefault(s.to_int(), []).append(j)
    return singles, pairs


def classify(spec: CodeSpec, s: int, mode: str) -> tuple[Kind, int | None]:
    """Map a packed syndrome to (kind, 0-based first flipped position)."""
    if s == 0:
        return Kind.NO_ERROR, None
    singles, pairs = _lookups(spec)
    if mode == "secded":
        hit = singles.get(s, ())
        if len(hit) == 1:
            return Kind.SINGLE_CORRECTED, hit[0]
        return Kind.DETECTED_UNCORRECTABLE, None
    if mode != "daec":
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    single_hit = singles.get(s, ())
    pair_hit = pairs.get(s, ())
    if single_hit and pair_hit:
        raise MalformedCodeError(
            f"code {spec.name}: syndrome {s:#x} matches column {single_hit[0] + 1} "
            f"and pair ({pair_hit[0] + 1},{pair_hit[0] + 2})"
        )
    if s.bit_count() & 1:
        if len(single_hit) == 1:
            return Kind.SINGLE_CORRECTED, single_hit[0]
    elif len(pair_hit) == 1:
        return Kind.ADJACENT_CORRECTED, pair_hit[0]
    return Kind.DETECTED_UNCORRECTABLE, None


def _outcome(spec: CodeSpec, received: BitVector, s: BitVector, kind: Kind, pos) -> DecodeOutcome:
    if kind == Kind.DETECTED_UNCORRECTABLE:
        return DecodeOutcome(kind, s)
    word = received.to_int()
    if kind == Kind.SINGLE_CORRECTED:
        word ^= 1 << pos
    elif kind == Kind.ADJACENT_CORRECTED:
        word ^= 0b11 << pos
    corrected = BitVector.from_int(word, spec.n)
    return DecodeOutcome(
        kind,
        s,
        position=None if pos is None else pos + 1,
        corrected=corrected,
        data=extract_data(spec, corrected),
    )


def decode(spec: CodeSpec, received: BitVector, mode: str = "daec") -> DecodeOutcome:
    s = syndrome(spec, received)
    kind, pos = classify(spec, s.to_int(), mode)
    return _outcome(spec, received, s, kind, pos)


def decode_secded(spec: CodeSpec, received: BitVector) -> DecodeOutcome:
    """Zero syndrome: no error. Syndrome equal to one column: flip it. Else detected."""
    return decode(spec, received, "secded")


def decode_daec(spec: CodeSpec, received: BitVector) -> DecodeOutcome:
    """Syndrome parity selects the candidate set.

    Odd syndromes are compared with single columns, even ones with adjacent
    pair signatures. Raises :class:`MalformedCodeError` when a syndrome
    matches both kinds, which a well-formed code never allows.
    """
    return decode(spec, received, "daec")


# Packed batch form. Words are integers with bit j holding position j+1.

def syndromes_packed(spec: CodeSpec, words: np.ndarray) -> np.ndarray:
    words = np.asarray(words, dtype=np.uint64)
    out = np.zeros(words.shape, dtype=np.uint64)
    for j, c in enumerate(spec.column_ints):
        bit = (words >> np.uint64(j)) & np.uint64(1)
        out ^= bit * np.uint64(c)
    return out


def decode_packed(spec: CodeSpec, words: np.ndarray, mode: str = "daec"):
    """Vectorised :func:`decode` over packed words.

    Returns ``(kinds, positions, corrected)``; positions are 1-based with 0
    meaning none, ``corrected`` equals the input where uncorrectable.
    Classification goes through :func:`classify`, once per distinct syndrome.
    """
    words = np.asarray(words, dtype=np.uint64)
    s = syndromes_packed(spec, words)
    kind_lut = np.zeros(1 << spec.r, dtype=np.uint8)
    pos_lut = np.zeros(1 << spec.r, dtype=np.int64)
    flip_lut = np.zeros(1 << spec.r, dtype=np.uint64)
    for value in np.unique(s).tolist():
        kind, pos = classify(spec, value, mode)
        kind_lut[value] = kind
        if pos is not None:
            pos_lut[value] = pos + 1
            flip_lut[value] = (1 if kind == Kind.SINGLE_CORRECTED else 0b11) << pos
    idx = s.astype(np.int64)
    return kind_lut[idx], pos_lut[idx], words ^ flip_lut[idx]


def encode_packed(spec: CodeSpec, data: np.ndarray) -> np.ndarray:
    data = np.asarray(data, dtype=np.uint64)
    checks = syndromes_packed(spec, data)  # data-only words: syndrome equals the check bits
    return data | (checks << np.uint64(spec.k))
