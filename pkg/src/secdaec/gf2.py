"""Dense GF(2) vectors and matrices.

Positions are 0-based internally. Bit ``i`` of a vector corresponds to the
``i+1``-th printed column of a matrix figure, so ``d1`` lives at index 0.
Both types are immutable; every operation returns a fresh value.

A vector is stored as a Python int (bit ``i`` of the int is element ``i``)
plus a length, which keeps XOR and parity cheap for exhaustive sweeps.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np


class DimensionError(ValueError):
    """Operands have incompatible sizes."""


class MatrixParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class BitVector:
    __slots__ = ("_value", "_len")

    def __init__(self, bits: Iterable[int] = ()):
        value = 0
        n = 0
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise ValueError(f"element {i} is {b!r}, expected 0 or 1")
            value |= int(b) << i
            n = i + 1
        self._value = value
        self._len = n

    @classmethod
    def from_int(cls, value: int, length: int) -> BitVector:
        if value < 0 or value >> length:
            raise ValueError(f"value {value:#x} does not fit in {length} bits")
        v = cls.__new__(cls)
        v._value = value
        v._len = length
        return v

    @classmethod
    def zeros(cls, length: int) -> BitVector:
        return cls.from_int(0, length)

    @classmethod
    def unit(cls, length: int, index: int) -> BitVector:
        """Vector with a single one at 0-based ``index``."""
        if not 0 <= index < length:
            raise IndexError(f"index {index} out of range for length {length}")
        return cls.from_int(1 << index, length)

    @classmethod
    def from_str(cls, text: str) -> BitVector:
        """Parse a binary string, leftmost character first (``"101"`` -> (1,0,1))."""
        text = text.strip()
        for i, ch in enumerate(text):
            if ch not in "01":
                raise ValueError(f"invalid bit character {ch!r} at offset {i}")
        return cls(int(ch) for ch in text)

    def to_str(self) -> str:
        return "".join(str(b) for b in self)

    def to_int(self) -> int:
        return self._value

    def to_array(self) -> np.ndarray:
        return np.array(self.bits, dtype=np.uint8)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self._value >> i) & 1 for i in range(self._len))

    @property
    def weight(self) -> int:
        return self._value.bit_count()

    @property
    def parity(self) -> int:
        return self._value.bit_count() & 1

    def support(self) -> tuple[int, ...]:
        """0-based indices of the ones."""
        return tuple(i for i in range(self._len) if (self._value >> i) & 1)

    def is_zero(self) -> bool:
        return self._value == 0

    def __len__(self) -> int:
        return self._len

    def __iter__(self) -> Iterator[int]:
        for i in range(self._len):
            yield (self._value >> i) & 1

    def __getitem__(self, i: int) -> int:
        if i < 0:
            i += self._len
        if not 0 <= i < self._len:
            raise IndexError(i)
        return (self._value >> i) & 1

    def __xor__(self, other: BitVector) -> BitVector:
        return vec_add(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self._len == other._len and self._value == other._value

    def __hash__(self) -> int:
        return hash((self._len, self._value))

    def __repr__(self) -> str:
        return f"BitVector('{self.to_str()}')"


class BitMatrix:
    """Row-major binary matrix."""

    __slots__ = ("_rows", "_ncols")

    def __init__(self, rows: Iterable[Iterable[int]], ncols: int | None = None):
        vecs = tuple(r if isinstance(r, BitVector) else BitVector(r) for r in rows)
        if ncols is None:
            ncols = len(vecs[0]) if vecs else 0
        for i, r in enumerate(vecs):
            if len(r) != ncols:
                raise DimensionError(f"row {i} has {len(r)} entries, expected {ncols}")
        self._rows = vecs
        self._ncols = ncols

    @classmethod
    def from_array(cls, array) -> BitMatrix:
        a = np.asarray(array)
        if a.ndim != 2:
            raise DimensionError(f"expected a 2-D array, got shape {a.shape}")
        return cls(([int(x) for x in row] for row in a), ncols=a.shape[1])

    @classmethod
    def identity(cls, size: int) -> BitMatrix:
        return cls((BitVector.unit(size, i) for i in range(size)), ncols=size)

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def cols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self._rows), self._ncols)

    def row(self, i: int) -> BitVector:
        return self._rows[i]

    def col(self, j: int) -> BitVector:
        if not 0 <= j < self._ncols:
            raise IndexError(j)
        return BitVector.from_int(
            sum(((r.to_int() >> j) & 1) << i for i, r in enumerate(self._rows)),
            len(self._rows),
        )

    def columns(self) -> list[BitVector]:
        return [self.col(j) for j in range(self._ncols)]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._rows[i][j]

    def submatrix(self, col_start: int, col_stop: int) -> BitMatrix:
        """Columns ``col_start:col_stop`` as a new matrix."""
        width = col_stop - col_start
        mask = (1 << width) - 1
        return BitMatrix(
            (BitVector.from_int((r.to_int() >> col_start) & mask, width) for r in self._rows),
            ncols=width,
        )

    def with_flipped(self, i: int, j: int) -> BitMatrix:
        """Copy with entry (i, j) complemented."""
        rows = list(self._rows)
        rows[i] = rows[i] ^ BitVector.unit(self._ncols, j)
        return BitMatrix(rows, ncols=self._ncols)

    def to_array(self) -> np.ndarray:
        return np.array([r.bits for r in self._rows], dtype=np.uint8).reshape(self.shape)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self._ncols == other._ncols and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._ncols, self._rows))

    def __repr__(self) -> str:
        body = "; ".join(r.to_str() for r in self._rows)
        return f"BitMatrix({self.rows}x{self.cols}: {body})"


def vec_add(a: BitVector, b: BitVector) -> BitVector:
    if len(a) != len(b):
        raise DimensionError(f"cannot add vectors of length {len(a)} and {len(b)}")
    return BitVector.from_int(a.to_int() ^ b.to_int(), len(a))


def mat_vec_mul(m: BitMatrix, v: BitVector) -> BitVector:
    """Product ``m . v`` over GF(2)."""
    if len(v) != m.cols:
        raise DimensionError(f"matrix has {m.cols} columns but vector has length {len(v)}")
    x = v.to_int()
    out = 0
    for i in range(m.rows):
        out |= ((m.row(i).to_int() & x).bit_count() & 1) << i
    return BitVector.from_int(out, m.rows)


def parse_matrix(text: str) -> BitMatrix:
    """Read whitespace-separated 0/1 rows; blank lines and ``#`` lines are skipped."""
    rows: list[list[int]] = []
    width = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        row = []
        for tok in stripped.split():
            if tok not in ("0", "1"):
                raise MatrixParseError(lineno, f"non-binary token {tok!r}")
            row.append(int(tok))
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise MatrixParseError(lineno, f"ragged row: {len(row)} entries, expected {width}")
        rows.append(row)
    return BitMatrix(rows, ncols=width or 0)


def serialize_matrix(m: BitMatrix, header: Sequence[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    lines.extend(" ".join(str(b) for b in m.row(i)) for i in range(m.rows))
    return "\n".join(lines) + "\n"
