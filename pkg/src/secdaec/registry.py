"""Built-in SEC-DED / SEC-DED-DAEC parity-check matrices and code construction.

Every code is systematic: ``k`` data columns ``d1..dk`` followed by an
``(n-k)`` identity block of parity columns ``p1..p(n-k)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import NamedTuple

from .gf2 import BitMatrix, BitVector, parse_matrix, serialize_matrix


class UnknownCodeError(KeyError):
    def __str__(self) -> str:
        return self.args[0]


class InfeasibleError(ValueError):
    """No parity-check matrix satisfies the construction rules at this budget."""


@dataclass(frozen=True, eq=False)
class CodeSpec:
    """A named systematic linear code described by its parity-check matrix.

    Construction only checks dimensions. Use :meth:`violations` (or
    :meth:`check`) for the structural rules, so deliberately broken specs can
    still be fed to the verifier.
    """

    name: str
    n: int
    k: int
    h: BitMatrix

    def __post_init__(self):
        if not 0 < self.k < self.n:
            raise ValueError(f"need 0 < k < n, got n={self.n}, k={self.k}")
        if self.h.shape != (self.n - self.k, self.n):
            raise ValueError(
                f"H must be {self.n - self.k}x{self.n}, got {self.h.rows}x{self.h.cols}"
            )

    @property
    def r(self) -> int:
        """Number of parity bits."""
        return self.n - self.k

    @cached_property
    def columns(self) -> tuple[BitVector, ...]:
        return tuple(self.h.columns())

    @cached_property
    def column_ints(self) -> tuple[int, ...]:
        return tuple(c.to_int() for c in self.columns)

    @cached_property
    def pair_signatures(self) -> tuple[BitVector, ...]:
        """Syndromes of the ``n-1`` adjacent double errors (j, j+1)."""
        cols = self.columns
        return tuple(cols[j] ^ cols[j + 1] for j in range(self.n - 1))

    @cached_property
    def data_row_weights(self) -> tuple[int, ...]:
        """Ones per row within the data portion (one XOR-tree fan-in each)."""
        mask = (1 << self.k) - 1
        return tuple((self.h.row(i).to_int() & mask).bit_count() for i in range(self.r))

    def data_matrix(self) -> BitMatrix:
        return self.h.submatrix(0, self.k)

    def violations(self) -> list[str]:
        problems = []
        parity = self.h.submatrix(self.k, self.n)
        if parity != BitMatrix.identity(self.r):
            problems.append("parity columns do not form an identity block")
        seen: dict[BitVector, int] = {}
        for j, c in enumerate(self.columns):
            if c.is_zero():
                problems.append(f"column {j + 1} is zero")
            if j < self.k and c.weight % 2 == 0:
                problems.append(f"data column {j + 1} has even weight {c.weight}")
            if c in seen:
                problems.append(f"columns {seen[c] + 1} and {j + 1} are equal")
            else:
                seen[c] = j
        return problems

    def check(self) -> CodeSpec:
        problems = self.violations()
        if problems:
            raise ValueError(f"code {self.name}: " + "; ".join(problems))
        return self

    def to_text(self) -> str:
        return serialize_matrix(self.h, header=[f"code {self.name} n={self.n} k={self.k}"])

    @classmethod
    def from_text(cls, text: str, name: str, k: int) -> CodeSpec:
        h = parse_matrix(text)
        return cls(name=name, n=h.cols, k=k, h=h)

    def __repr__(self) -> str:
        return f"CodeSpec({self.name!r}, n={self.n}, k={self.k})"


# Transcribed row by row from the published figures; row 1 is the top line.
_MATRICES = {
    "8-3": """
        1 1 0 1 0 0 0 0
        0 1 0 0 1 0 0 0
        0 1 1 0 0 1 0 0
        1 0 1 0 0 0 1 0
        1 0 1 0 0 0 0 1
    """,
    "9-4": """
        0 1 1 0 1 0 0 0 0
        1 0 1 0 0 1 0 0 0
        0 1 0 1 0 0 1 0 0
        1 1 0 1 0 0 0 1 0
        1 0 1 1 0 0 0 0 1
    """,
    "11-5": """
        0 0 1 1 0 1 0 0 0 0 0
        1 1 0 1 0 0 1 0 0 0 0
        0 1 0 1 1 0 0 1 0 0 0
        1 0 1 0 1 0 0 0 1 0 0
        1 0 0 0 0 0 0 0 0 1 0
        0 1 1 0 1 0 0 0 0 0 1
    """,
    "13-7": """
        0 1 0 0 1 1 0 1 0 0 0 0 0
        0 0 1 1 0 1 0 0 1 0 0 0 0
        1 1 0 1 0 1 1 0 0 1 0 0 0
        0 1 1 0 1 0 1 0 0 0 1 0 0
        1 0 1 0 0 0 0 0 0 0 0 1 0
        1 0 0 1 1 0 1 0 0 0 0 0 1
    """,
    "14-8": """
        1 0 1 0 0 1 1 0 1 0 0 0 0 0
        0 1 1 1 1 0 1 0 0 1 0 0 0 0
        1 1 0 0 1 0 1 1 0 0 1 0 0 0
        1 0 0 1 0 1 0 1 0 0 0 1 0 0
        0 1 0 1 0 0 0 0 0 0 0 0 1 0
        0 0 1 0 1 1 0 1 0 0 0 0 0 1
    """,
    "24-16": """
        1 0 1 0 0 0 1 0 1 0 1 0 0 1 1 0 1 0 0 0 0 0 0 0
        0 1 0 0 0 0 0 1 0 0 0 1 1 0 1 0 0 1 0 0 0 0 0 0
        0 0 0 0 1 1 1 0 0 0 1 0 1 0 1 1 0 0 1 0 0 0 0 0
        0 0 0 0 0 0 0 0 0 1 1 1 0 1 0 1 0 0 0 1 0 0 0 0
        1 0 0 1 1 0 1 1 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0
        0 1 1 1 0 1 0 0 0 1 0 1 0 0 0 0 0 0 0 0 0 1 0 0
        0 0 1 0 1 0 0 1 1 1 0 0 0 0 0 0 0 0 0 0 0 0 1 0
        1 1 0 1 0 1 0 0 1 0 0 0 1 1 0 1 0 0 0 0 0 0 0 1
    """,
}

# Lengths listed in the parity-bit table but with no published matrix.
BOUND_ONLY = {"12-6": 6}


def available() -> list[str]:
    return list(_MATRICES)


def builtin(name: str) -> CodeSpec:
    try:
        text = _MATRICES[name]
    except KeyError:
        hint = ""
        if name in BOUND_ONLY:
            hint = " (only its parity-bit count is published, not a matrix)"
        raise UnknownCodeError(
            f"unknown code {name!r}{hint}; available: {', '.join(_MATRICES)}"
        ) from None
    n, k = (int(x) for x in name.split("-"))
    return CodeSpec(name=name, n=n, k=k, h=parse_matrix(text))


def all_builtin() -> list[CodeSpec]:
    return [builtin(name) for name in _MATRICES]


@dataclass(frozen=True)
class QMatrix:
    """Adjacent-pair signatures of the data columns.

    ``signatures[j]`` is ``col(d_{j+1}) ^ col(d_{j+2})``, the last one pairing
    ``d_k`` with ``p1``. ``positions`` gives the 1-based rows holding a one,
    which is how the matrix is printed (one column per data bit).
    """

    signatures: tuple[BitVector, ...]
    positions: tuple[tuple[int, ...], ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self, "positions", tuple(tuple(i + 1 for i in s.support()) for s in self.signatures)
        )

    def as_rows(self) -> list[list[int]]:
        """Printed layout: row ``i`` holds the ``i``-th smallest position of each column."""
        depth = max(len(p) for p in self.positions)
        return [[p[i] if i < len(p) else 0 for p in self.positions] for i in range(depth)]


def q_matrix(spec: CodeSpec) -> QMatrix:
    return QMatrix(spec.pair_signatures[: spec.k])


class ParityBound(NamedTuple):
    value: int
    raw: float
    in_range: bool


PARITY_BOUND_RANGE = (1, 8)


def parity_bound(k: int) -> ParityBound:
    """Approximate minimum parity count for a weight-3 DAEC code with ``k`` data bits.

    ``sqrt(1 + 2.5k) + 1.90`` rounded to nearest. The fit is only claimed for
    ``k <= 8``; outside that range the value is still returned with
    ``in_range=False``.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    raw = math.sqrt(1 + 2.5 * k) + 1.90
    lo, hi = PARITY_BOUND_RANGE
    return ParityBound(int(math.floor(raw + 0.5)), raw, lo <= k <= hi)


def construct(k: int, parity: int | None = None, *, weight: int = 3, name: str | None = None) -> CodeSpec:
    """Search for a SEC-DED-DAEC parity-check matrix with ``k`` data bits.

    Data columns all have the given odd ``weight``, so total matrix weight is
    fixed; the search minimises the largest data-row weight (the XOR-chain
    length that sets delay). Columns are placed right to left, ``d_k`` first,
    and candidates are tried in lexicographic order of their row positions,
    so the result is deterministic.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if weight % 2 == 0:
        raise ValueError("data columns need odd weight")
    r = parity_bound(k).value if parity is None else parity
    if r < weight:
        raise InfeasibleError(f"no weight-{weight} columns exist with {r} parity bits")

    candidates = [
        sum(1 << i for i in rows) for rows in combinations(range(r), weight)
    ]
    if len(candidates) < k:
        raise InfeasibleError(
            f"only {len(candidates)} weight-{weight} columns with {r} parity bits, need {k}"
        )
    parity_cols = [1 << i for i in range(r)]
    fixed_pairs = {parity_cols[i] ^ parity_cols[i + 1] for i in range(r - 1)}
    lower = -(-weight * k // r)
    for cap in range(lower, k + 1):
        found = _search(k, r, candidates, set(parity_cols), fixed_pairs, cap, weight)
        if found is not None:
            rows = [
                [(found[j] >> i) & 1 for j in range(k)] + [int(i == p) for p in range(r)]
                for i in range(r)
            ]
            return CodeSpec(
                name=name or f"{k + r}-{k}", n=k + r, k=k, h=BitMatrix(rows, ncols=k + r)
            )
    raise InfeasibleError(f"no valid matrix for k={k} with {r} parity bits (budget exhausted)")


def _search(k, r, candidates, singles, pairs, cap, weight):
    cols = [0] * k
    load = [0] * r
    used = set(singles)
    pair_set = set(pairs)

    def place(j, right):
        if j < 0:
            return True
        if sum(cap - x for x in load) < weight * (j + 1):
            return False
        for c in candidates:
            if c in used or c in pair_set:
                continue
            sig = c ^ right
            if sig in used or sig == c or sig in pair_set:
                continue
            bits = [i for i in range(r) if (c >> i) & 1]
            if any(load[i] >= cap for i in bits):
                continue
            cols[j] = c
            used.add(c)
            pair_set.add(sig)
            for i in bits:
                load[i] += 1
            if place(j - 1, c):
                return True
            for i in bits:
                load[i] -= 1
            pair_set.discard(sig)
            used.discard(c)
        return False

    # d_k is paired with p1
    return cols if place(k - 1, 1) else None
