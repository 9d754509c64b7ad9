"""Exhaustive property checks and an independent table-lookup decoder.

Error disposition depends only on the syndrome, so every error pattern is
applied to the all-zero codeword; a handful of random nonzero codewords are
checked on top of that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .codec import (
    DecodeOutcome,
    Kind,
    MalformedCodeError,
    decode,
    decode_packed,
    encode,
    extract_data,
)
from .gf2 import BitVector, mat_vec_mul
from .registry import CodeSpec


@dataclass(frozen=True)
class Counterexample:
    pattern: tuple[int, ...]
    syndrome: str
    collides_with: tuple[int, ...]
    reason: str = ""


@dataclass
class DoubleStats:
    total: int = 0
    detected: int = 0
    miscorrected_single: int = 0
    miscorrected_adjacent: int = 0
    aliased_to_zero: int = 0

    def as_dict(self) -> dict:
        return dict(vars(self))


@dataclass
class PropertyReport:
    code: str
    mode: str
    sec_ok: bool
    daec_ok: bool
    parity_split_ok: bool
    singles_checked: int
    pairs_checked: int
    nonadjacent_double_stats: DoubleStats
    counterexamples: list[Counterexample] = field(default_factory=list)
    nonadjacent_witnesses: list[Counterexample] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.sec_ok and (self.mode != "daec" or self.daec_ok)

    def as_dict(self) -> dict:
        return {
            "code": self.code,
            "mode": self.mode,
            "sec_ok": self.sec_ok,
            "daec_ok": self.daec_ok,
            "parity_split_ok": self.parity_split_ok,
            "singles_checked": self.singles_checked,
            "pairs_checked": self.pairs_checked,
            "nonadjacent_double_stats": self.nonadjacent_double_stats.as_dict(),
            "counterexamples": [vars(c) for c in self.counterexamples],
            "nonadjacent_witnesses": [vars(c) for c in self.nonadjacent_witnesses[:5]],
        }


def inject(word: BitVector, positions) -> BitVector:
    """Flip the given 1-based positions."""
    positions = list(positions)
    if len(set(positions)) != len(positions):
        raise ValueError(f"flip positions must be distinct, got {positions}")
    mask = 0
    for p in positions:
        if not 1 <= p <= len(word):
            raise ValueError(f"position {p} outside 1..{len(word)}")
        mask |= 1 << (p - 1)
    return BitVector.from_int(word.to_int() ^ mask, len(word))


def _collisions(spec: CodeSpec, s: BitVector, exclude: tuple[int, ...]) -> tuple[int, ...]:
    for j, c in enumerate(spec.columns):
        if c == s and (j + 1,) != exclude:
            return (j + 1,)
    for j, p in enumerate(spec.pair_signatures):
        if p == s and (j + 1, j + 2) != exclude:
            return (j + 1, j + 2)
    return ()


def _try_decode(spec, word, mode):
    try:
        return decode(spec, word, mode), ""
    except MalformedCodeError as exc:
        return None, str(exc)


def verify_code(spec: CodeSpec, mode: str = "daec", *, samples: int = 16, seed: int = 0) -> PropertyReport:
    n = spec.n
    zero = BitVector.zeros(n)
    cex: list[Counterexample] = []

    def check(pattern, expected_kind, record=True):
        word = inject(zero, pattern)
        out, err = _try_decode(spec, word, mode)
        if out is not None and out.kind == expected_kind and out.flipped() == pattern:
            return True
        if not record:
            return False
        s = mat_vec_mul(spec.h, word)
        cex.append(Counterexample(pattern, s.to_str(), _collisions(spec, s, pattern), err))
        return False

    sec_ok = all([check((i,), Kind.SINGLE_CORRECTED) for i in range(1, n + 1)])
    # the SEC-DED decoder never corrects pairs; don't flood the report with that
    daec_ok = all(
        [check((i, i + 1), Kind.ADJACENT_CORRECTED, mode == "daec") for i in range(1, n)]
    )

    parity_split_ok = all(c.parity == 1 for c in spec.columns) and all(
        p.parity == 0 for p in spec.pair_signatures
    )

    stats = DoubleStats()
    witnesses = []
    for i, j in combinations(range(1, n + 1), 2):
        if j == i + 1:
            continue
        stats.total += 1
        word = inject(zero, (i, j))
        out, _ = _try_decode(spec, word, mode)
        if out is None or out.kind == Kind.DETECTED_UNCORRECTABLE:
            stats.detected += 1
            continue
        if out.kind == Kind.NO_ERROR:
            stats.aliased_to_zero += 1
        elif out.kind == Kind.SINGLE_CORRECTED:
            stats.miscorrected_single += 1
        else:
            stats.miscorrected_adjacent += 1
        witnesses.append(Counterexample((i, j), out.syndrome.to_str(), out.flipped(), out.kind.name))

    # belt and braces: the same properties on random nonzero codewords
    rng = np.random.default_rng(seed)
    for _ in range(samples if (sec_ok or daec_ok) else 0):
        data = BitVector(rng.integers(0, 2, spec.k).tolist())
        cw = encode(spec, data)
        for i in range(1, n + 1):
            out, _ = _try_decode(spec, inject(cw, (i,)), mode)
            if out is None or out.data != data:
                sec_ok = False
        for i in range(1, n):
            out, _ = _try_decode(spec, inject(cw, (i, i + 1)), mode)
            if out is None or out.data != data:
                daec_ok = False

    return PropertyReport(
        code=spec.name,
        mode=mode,
        sec_ok=sec_ok,
        daec_ok=daec_ok,
        parity_split_ok=parity_split_ok,
        singles_checked=n,
        pairs_checked=n - 1,
        nonadjacent_double_stats=stats,
        counterexamples=cex,
        nonadjacent_witnesses=witnesses,
    )


def nonadjacent_double_count(n: int) -> int:
    return math.comb(n, 2) - (n - 1)


class SyndromeTable:
    """Syndrome -> correctable error pattern, built straight from H.

    Entries map a syndrome (as a tuple of bits) to ``("single", (j,))`` or
    ``("pair", (j, j+1))`` with 1-based positions. Signatures claimed by more
    than one pattern are left unassigned and listed in ``conflicts``.
    """

    def __init__(self, spec: CodeSpec, mode: str = "daec"):
        h = spec.h.to_array().astype(np.int64)
        claims: dict[tuple, list] = {}
        for j in range(spec.n):
            claims.setdefault(tuple(h[:, j]), []).append(("single", (j + 1,)))
        if mode == "daec":
            for j in range(spec.n - 1):
                sig = tuple((h[:, j] + h[:, j + 1]) % 2)
                claims.setdefault(sig, []).append(("pair", (j + 1, j + 2)))
        zero = (0,) * spec.r
        self.entries = {s: c[0] for s, c in claims.items() if len(c) == 1 and s != zero}
        self.conflicts = {s: c for s, c in claims.items() if len(c) > 1 or s == zero}
        self.spec = spec
        self.mode = mode
        self._h = h

    def lookup(self, s: tuple[int, ...]):
        if not any(s):
            return ("zero", ())
        return self.entries.get(tuple(s), ("unassigned", ()))

    def syndrome(self, received) -> tuple[int, ...]:
        r = np.asarray(list(received), dtype=np.int64)
        return tuple(int(x) for x in (self._h @ r) % 2)

    def packed(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """LUT arrays (kind, 1-based position, flip mask) indexed by packed syndrome."""
        size = 1 << self.spec.r
        kinds = np.full(size, Kind.DETECTED_UNCORRECTABLE, dtype=np.uint8)
        kinds[0] = Kind.NO_ERROR
        pos = np.zeros(size, dtype=np.int64)
        flips = np.zeros(size, dtype=np.uint64)
        weights = 1 << np.arange(self.spec.r)
        for s, (kind, positions) in self.entries.items():
            idx = int(np.dot(s, weights))
            kinds[idx] = Kind.SINGLE_CORRECTED if kind == "single" else Kind.ADJACENT_CORRECTED
            pos[idx] = positions[0]
            flips[idx] = sum(1 << (p - 1) for p in positions)
        return kinds, pos, flips


_KIND_BY_NAME = {
    "zero": Kind.NO_ERROR,
    "single": Kind.SINGLE_CORRECTED,
    "pair": Kind.ADJACENT_CORRECTED,
    "unassigned": Kind.DETECTED_UNCORRECTABLE,
}


def oracle_decode(table: SyndromeTable, spec: CodeSpec, received: BitVector) -> DecodeOutcome:
    s = table.syndrome(received)
    kind_name, positions = table.lookup(s)
    kind = _KIND_BY_NAME[kind_name]
    syn = BitVector(s)
    if kind == Kind.DETECTED_UNCORRECTABLE:
        return DecodeOutcome(kind, syn)
    bits = list(received)
    for p in positions:
        bits[p - 1] ^= 1
    corrected = BitVector(bits)
    return DecodeOutcome(
        kind,
        syn,
        position=positions[0] if positions else None,
        corrected=corrected,
        data=extract_data(spec, corrected),
    )


def oracle_decode_packed(table: SyndromeTable, words: np.ndarray, chunk: int = 1 << 18):
    """Table-lookup decode of packed words; syndromes via an integer matmul."""
    spec = table.spec
    kinds_lut, pos_lut, flip_lut = table.packed()
    words = np.asarray(words, dtype=np.uint64)
    h_t = table._h.T.astype(np.uint8)
    weights = (1 << np.arange(spec.r)).astype(np.int64)
    shifts = np.arange(spec.n, dtype=np.uint64)
    kinds = np.empty(words.shape, dtype=np.uint8)
    pos = np.empty(words.shape, dtype=np.int64)
    corrected = np.empty(words.shape, dtype=np.uint64)
    for start in range(0, words.size, chunk):
        w = words[start : start + chunk]
        bits = ((w[:, None] >> shifts) & np.uint64(1)).astype(np.uint8)
        s = ((bits @ h_t) % 2).astype(np.int64) @ weights
        kinds[start : start + chunk] = kinds_lut[s]
        pos[start : start + chunk] = pos_lut[s]
        corrected[start : start + chunk] = w ^ flip_lut[s]
    return kinds, pos, corrected


def oracle_mismatches(spec: CodeSpec, mode: str = "daec", words=None, chunk: int = 1 << 20) -> int:
    """Received words where :func:`decode_packed` and the lookup oracle disagree.

    Defaults to all ``2**n`` words, processed in chunks.
    """
    table = SyndromeTable(spec, mode)
    total = 0
    if words is None:
        ranges = ((a, min(a + chunk, 1 << spec.n)) for a in range(0, 1 << spec.n, chunk))
        blocks = (np.arange(a, b, dtype=np.uint64) for a, b in ranges)
    else:
        w = np.asarray(words, dtype=np.uint64)
        blocks = (w[a : a + chunk] for a in range(0, w.size, chunk))
    for block in blocks:
        k1, p1, c1 = decode_packed(spec, block, mode)
        k2, p2, c2 = oracle_decode_packed(table, block)
        total += int(np.count_nonzero((k1 != k2) | (p1 != p2) | (c1 != c2)))
    return total
