"""Gate-count area and critical-path models in NAND2 equivalents.

The gate model is ripple chains of 2-input gates: an ``m``-input XOR or AND
costs ``m-1`` gates and ``m-1`` levels.

Area (SEC-DED, encoder plus decoder):
    XOR2 = 2*sum_i(w_i - 1) + (n-k) + k
        encoder chains, syndrome recompute + compare, one correction per data bit
    AND2 = sum over data columns of (weight - 1)

SEC-DED-DAEC adds an (n-k)-input syndrome parity chain and the pair
matchers. Each data bit gets a single-column matcher gated by syndrome
parity plus its own (unshared) matchers for the adjacent pairs it belongs
to, merged with OR2. For weight-3 columns and weight-4 pair signatures this
gives AND2 = 9k - 3 and OR2 = 2k - 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .registry import CodeSpec

NAND2_WEIGHTS = {"xor2": 4, "and2": 2, "or2": 3, "not_": 1}


def nand2_equiv(xor2: int = 0, and2: int = 0, or2: int = 0, not_: int = 0) -> int:
    return (
        NAND2_WEIGHTS["xor2"] * xor2
        + NAND2_WEIGHTS["and2"] * and2
        + NAND2_WEIGHTS["or2"] * or2
        + NAND2_WEIGHTS["not_"] * not_
    )


@dataclass(frozen=True)
class GateCensus:
    xor2: int = 0
    and2: int = 0
    or2: int = 0
    not_: int = 0

    def __post_init__(self):
        for name in ("xor2", "and2", "or2", "not_"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} count must be non-negative")

    @property
    def nand2_equiv(self) -> int:
        return nand2_equiv(self.xor2, self.and2, self.or2, self.not_)

    def counts(self) -> tuple[int, int, int, int]:
        return (self.xor2, self.and2, self.or2, self.not_)

    def __add__(self, other: GateCensus) -> GateCensus:
        return type(self)(*(a + b for a, b in zip(self.counts(), other.counts())))

    def as_dict(self) -> dict:
        return {
            "XOR2": self.xor2,
            "AND2": self.and2,
            "OR2": self.or2,
            "NOT": self.not_,
            "NAND2": self.nand2_equiv,
        }


class DepthCensus(GateCensus):
    """Gates of each kind in series on the critical path."""


def _pair_uses(spec: CodeSpec):
    """Adjacent-pair signatures feeding each data bit's correction, in order."""
    sigs = spec.pair_signatures
    for j in range(spec.k):
        if j > 0:
            yield sigs[j - 1]
        yield sigs[j]


def area_secded(spec: CodeSpec) -> GateCensus:
    tree = sum(max(w - 1, 0) for w in spec.data_row_weights)
    xor2 = 2 * tree + spec.r + spec.k
    and2 = sum(spec.columns[j].weight - 1 for j in range(spec.k))
    return GateCensus(xor2=xor2, and2=and2)


def area_daec(spec: CodeSpec) -> GateCensus:
    base = area_secded(spec)
    xor2 = base.xor2 + spec.r - 1
    # single matchers carry one extra AND2 for the odd-parity gate
    and2 = sum(spec.columns[j].weight for j in range(spec.k))
    and2 += sum(s.weight - 1 for s in _pair_uses(spec))
    or2 = 2 * spec.k - 1
    return GateCensus(xor2=xor2, and2=and2, or2=or2)


def delay_secded(spec: CodeSpec) -> DepthCensus:
    w_max = max(spec.data_row_weights)
    # encoder chain, then the syndrome chain (one longer), then the correcting XOR
    xor2 = 2 * (w_max - 1) + 2
    and2 = max(spec.columns[j].weight for j in range(spec.k)) - 1
    return DepthCensus(xor2=xor2, and2=and2)


def delay_daec(spec: CodeSpec) -> DepthCensus:
    base = delay_secded(spec)
    and2 = max(
        max(spec.columns[j].weight for j in range(spec.k)),
        max(s.weight for s in _pair_uses(spec)) - 1,
    )
    return DepthCensus(xor2=base.xor2 + spec.r - 1, and2=and2, or2=2 if spec.k > 1 else 1)


def area(spec: CodeSpec, mode: str) -> GateCensus:
    return area_daec(spec) if mode == "daec" else area_secded(spec)


def delay(spec: CodeSpec, mode: str) -> DepthCensus:
    return delay_daec(spec) if mode == "daec" else delay_secded(spec)


@dataclass(frozen=True)
class PublishedRow:
    group: str
    scheme: str
    n: int
    k: int
    census: GateCensus
    nand2: int
    note: str = field(default="", compare=False)

    @property
    def code(self) -> str:
        return f"{self.n}-{self.k}"


def _rows(spec_rows, cls):
    out = []
    for group, scheme, n, k, x, a, o, nt, nand in spec_rows:
        out.append(PublishedRow(group, scheme, n, k, cls(x, a, o, nt), nand))
    return out


# Published gate counts; "-" entries read as 0.
_AREA = [
    ("existing-secded", "Alabady-a", 9, 4, 31, 16, 0, 4, 160),
    ("existing-secded", "Alabady-b", 9, 4, 15, 16, 0, 12, 104),
    ("existing-secded", "Adalid", 8, 4, 27, 17, 3, 5, 156),
    ("existing-secded", "Hsiao", 13, 8, 51, 32, 0, 16, 284),
    ("existing-secded", "Hamming", 13, 8, 59, 32, 0, 14, 314),
    ("existing-secded", "Cha-Yoon", 13, 8, 58, 32, 0, 13, 309),
    ("existing-secded", "Adalid", 16, 8, 55, 25, 7, 1, 292),
    ("proposed-secded", "Proposed", 8, 3, 16, 6, 0, 0, 76),
    ("proposed-secded", "Proposed", 9, 4, 23, 8, 0, 0, 108),
    ("proposed-secded", "Proposed", 11, 5, 29, 10, 0, 0, 136),
    ("proposed-secded", "Proposed", 13, 7, 43, 14, 0, 0, 200),
    ("proposed-secded", "Proposed", 14, 8, 50, 16, 0, 0, 232),
    ("proposed-secded", "Proposed", 24, 16, 120, 32, 0, 0, 544),
    ("existing-daec", "Ming", 22, 16, 112, 235, 31, 120, 1131),
    ("existing-daec", "Dutta", 22, 16, 106, 235, 31, 126, 1113),
    ("proposed-daec", "Proposed", 8, 3, 20, 24, 5, 0, 143),
    ("proposed-daec", "Proposed", 9, 4, 27, 33, 7, 0, 195),
    ("proposed-daec", "Proposed", 11, 5, 34, 42, 9, 0, 247),
    ("proposed-daec", "Proposed", 13, 7, 48, 60, 13, 0, 351),
    ("proposed-daec", "Proposed", 14, 8, 55, 69, 15, 0, 403),
    ("proposed-daec", "Proposed", 24, 16, 127, 141, 31, 0, 883),
]

_DELAY = [
    ("existing-secded", "Alabady-a", 9, 4, 8, 4, 0, 1, 41),
    ("existing-secded", "Alabady-b", 9, 4, 4, 4, 0, 2, 26),
    ("existing-secded", "Adalid", 8, 4, 9, 4, 0, 2, 46),
    ("existing-secded", "Hsiao", 13, 8, 10, 4, 0, 1, 49),
    ("existing-secded", "Hamming", 13, 8, 20, 4, 0, 1, 89),
    ("existing-secded", "Cha-Yoon", 13, 8, 18, 4, 0, 1, 81),
    ("existing-secded", "Adalid", 16, 8, 10, 3, 7, 1, 68),
    ("proposed-secded", "Proposed", 8, 3, 4, 2, 0, 0, 20),
    ("proposed-secded", "Proposed", 9, 4, 6, 2, 0, 0, 28),
    ("proposed-secded", "Proposed", 11, 5, 6, 2, 0, 0, 28),
    ("proposed-secded", "Proposed", 13, 7, 10, 2, 0, 0, 44),
    ("proposed-secded", "Proposed", 14, 8, 10, 2, 0, 0, 44),
    ("proposed-secded", "Proposed", 24, 16, 16, 2, 0, 0, 68),
    ("existing-daec", "Ming", 22, 16, 22, 5, 2, 1, 105),
    ("existing-daec", "Dutta", 22, 16, 18, 5, 2, 1, 89),
    ("proposed-daec", "Proposed", 8, 3, 8, 3, 2, 0, 44),
    ("proposed-daec", "Proposed", 9, 4, 10, 3, 2, 0, 52),
    ("proposed-daec", "Proposed", 11, 5, 11, 3, 2, 0, 56),
    ("proposed-daec", "Proposed", 13, 7, 15, 3, 2, 0, 72),
    ("proposed-daec", "Proposed", 14, 8, 15, 3, 2, 0, 72),
    ("proposed-daec", "Proposed", 24, 16, 23, 3, 2, 0, 104),
]

PUBLISHED_AREA = _rows(_AREA, GateCensus)
PUBLISHED_DELAY = _rows(_DELAY, DepthCensus)

# Rows where the published figure cannot be reproduced from the published matrix.
# The 24-16 matrix has data-row weights 7,5,7,5,5,6,5,8 -> 2*40 + 8 + 16 = 104 XOR2.
KNOWN_AREA_DEVIATIONS = {
    ("proposed-secded", "24-16"): "published XOR2=120; model from the matrix gives 104",
    ("proposed-daec", "24-16"): "published XOR2=127 (=120+7); model gives 104+7=111",
}


def published(table: str, group: str, code: str) -> PublishedRow:
    rows = PUBLISHED_AREA if table == "area" else PUBLISHED_DELAY
    for row in rows:
        if row.group == group and row.code == code:
            return row
    raise KeyError((table, group, code))


def render_table(specs, kind: str = "area") -> str:
    """Aligned text table of model censuses beside the published rows."""
    header = f"{'Codec':<8} {'Mode':<7} {'XOR2':>5} {'AND2':>5} {'OR2':>4} {'NOT':>4} {'NAND2':>6}  {'published':>9}"
    lines = [header, "-" * len(header)]
    for mode in ("secded", "daec"):
        for spec in specs:
            c = area(spec, mode) if kind == "area" else delay(spec, mode)
            try:
                pub = published(kind, f"proposed-{mode}", spec.name).nand2
            except KeyError:
                pub = "-"
            flag = " *" if kind == "area" and (f"proposed-{mode}", spec.name) in KNOWN_AREA_DEVIATIONS else ""
            lines.append(
                f"({spec.n}, {spec.k})".ljust(8)
                + f" {mode:<7} {c.xor2:>5} {c.and2:>5} {c.or2:>4} {c.not_:>4} {c.nand2_equiv:>6}  {pub:>9}{flag}"
            )
    if kind == "area":
        lines.append("* published XOR2 not reproducible from the published matrix")
    return "\n".join(lines)
