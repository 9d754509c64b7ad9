"""Gate-level encoder/decoder networks built from 2-input primitives.

All multi-input functions are ripple chains. Decoder match detectors AND the
syndrome bits where the target signature is 1 (no inverters). The DAEC
single-column detectors are also gated by the syndrome parity, because an
adjacent-pair syndrome can contain a whole data column.

Gates carry a ``group``: ``"core"`` is the correction datapath the area
tables count; ``"flag"`` is the error/uncorrectable flag logic, kept out of
that comparison.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .codec import Kind, decode_packed, encode_packed
from .complexity import DepthCensus, GateCensus, nand2_equiv
from .registry import CodeSpec

KINDS = {"XOR2": 2, "AND2": 2, "OR2": 2, "NOT": 1}
CONST0 = "1'b0"

_CENSUS_FIELD = {"XOR2": "xor2", "AND2": "and2", "OR2": "or2", "NOT": "not_"}


class NetlistError(ValueError):
    pass


@dataclass(frozen=True)
class Gate:
    id: str
    kind: str
    inputs: tuple[str, ...]
    group: str = "core"


@dataclass(frozen=True)
class Netlist:
    name: str
    inputs: tuple[str, ...]
    outputs: tuple[tuple[str, str], ...]  # (port, driving ref)
    gates: tuple[Gate, ...] = ()

    def __post_init__(self):
        known = set(self.inputs) | {CONST0}
        if len(known) != len(self.inputs) + 1:
            raise NetlistError("duplicate input port")
        for g in self.gates:
            if g.kind not in KINDS:
                raise NetlistError(f"gate {g.id}: unknown kind {g.kind}")
            if len(g.inputs) != KINDS[g.kind]:
                raise NetlistError(f"gate {g.id}: {g.kind} takes {KINDS[g.kind]} inputs")
            for ref in g.inputs:
                if ref not in known:
                    raise NetlistError(f"gate {g.id}: input {ref!r} is not an earlier signal")
            if g.id in known:
                raise NetlistError(f"duplicate signal {g.id}")
            known.add(g.id)
        for port, ref in self.outputs:
            if ref not in known:
                raise NetlistError(f"output {port} driven by unknown signal {ref!r}")

    @property
    def output_names(self) -> tuple[str, ...]:
        return tuple(p for p, _ in self.outputs)


class _Builder:
    def __init__(self, prefix=""):
        self.gates: list[Gate] = []
        self.prefix = prefix
        self._count = {"core": 0, "flag": 0}

    def gate(self, kind, *inputs, group="core"):
        self._count[group] += 1
        tag = "g" if group == "core" else "f"
        gid = f"{self.prefix}{tag}{self._count[group]}"
        self.gates.append(Gate(gid, kind, tuple(inputs), group))
        return gid

    def chain(self, kind, refs, group="core"):
        refs = list(refs)
        if not refs:
            return CONST0
        acc = refs[0]
        for ref in refs[1:]:
            acc = self.gate(kind, acc, ref, group=group)
        return acc


def _by_depth(rows, weights):
    # deepest syndrome bits first: they then sit on the longest chain path
    return sorted(rows, key=lambda i: (-weights[i], i))


def emit_encoder(spec: CodeSpec) -> Netlist:
    b = _Builder()
    inputs = tuple(f"d{j + 1}" for j in range(spec.k))
    outputs = []
    for i in range(spec.r):
        row = spec.h.row(i)
        refs = [inputs[j] for j in range(spec.k) if row[j]]
        outputs.append((f"c{i + 1}", b.chain("XOR2", refs)))
    return Netlist(f"enc_{spec.name.replace('-', '_')}", inputs, tuple(outputs), tuple(b.gates))


def _correctable(spec: CodeSpec, mode: str) -> list[int]:
    """Packed syndromes the software decoder corrects in ``mode``."""
    cols = spec.column_ints
    if mode == "secded":
        return [c for c in cols if c and cols.count(c) == 1]
    pairs = [p.to_int() for p in spec.pair_signatures]
    out = [c for c in cols if c.bit_count() % 2 == 1 and cols.count(c) == 1 and c not in pairs]
    out += [p for p in pairs if p and p.bit_count() % 2 == 0 and pairs.count(p) == 1 and p not in cols]
    return out


def _positive_match_is_safe(target: int, gated: bool, correctable: list[int]) -> bool:
    # the detector must fire on exactly its target within the correctable set
    for s in correctable:
        fires = (s & target) == target and (not gated or s.bit_count() % 2 == 1)
        if fires != (s == target):
            return False
    return target in correctable


def emit_decoder(spec: CodeSpec, mode: str = "daec", *, shared: bool = False, flags: bool = True) -> Netlist:
    """Syndrome decoder producing corrected data ``q1..qk`` plus ``err``/``unc`` flags.

    ``shared=True`` lets adjacent data bits reuse one pair detector instead
    of building one per use.
    """
    if mode not in ("secded", "daec"):
        raise ValueError(f"unknown mode {mode!r}")
    b = _Builder()
    inputs = tuple(f"r{j + 1}" for j in range(spec.n))
    weights = spec.data_row_weights

    syn = []
    for i in range(spec.r):
        row = spec.h.row(i)
        refs = [inputs[spec.k + i]] + [inputs[j] for j in range(spec.k) if row[j]]
        syn.append(b.chain("XOR2", refs))

    correctable = _correctable(spec, mode)
    inverted: dict[int, str] = {}

    def exact(target):
        lits = []
        for i in _by_depth(range(spec.r), weights):
            if (target >> i) & 1:
                lits.append(syn[i])
            else:
                if i not in inverted:
                    inverted[i] = b.gate("NOT", syn[i])
                lits.append(inverted[i])
        return b.chain("AND2", lits)

    def detector(target, gate_ref=None):
        gated = gate_ref is not None
        if not _positive_match_is_safe(target, gated, correctable):
            return exact(target)
        rows = [i for i in _by_depth(range(spec.r), weights) if (target >> i) & 1]
        lead = [gate_ref] if gated else []
        return b.chain("AND2", lead + [syn[i] for i in rows])

    outputs = []
    if mode == "secded":
        for j in range(spec.k):
            hit = detector(spec.column_ints[j])
            outputs.append((f"q{j + 1}", b.gate("XOR2", inputs[j], hit)))
    else:
        odd = b.chain("XOR2", [syn[i] for i in _by_depth(range(spec.r), weights)])
        pair_cache: dict[int, str] = {}

        def pair(p):
            if shared and p in pair_cache:
                return pair_cache[p]
            ref = detector(spec.pair_signatures[p].to_int())
            pair_cache[p] = ref
            return ref

        for j in range(spec.k):
            hits = [detector(spec.column_ints[j], odd)]
            if j > 0:
                hits.append(pair(j - 1))
            hits.append(pair(j))
            outputs.append((f"q{j + 1}", b.gate("XOR2", inputs[j], b.chain("OR2", hits))))

    if flags:
        err = b.chain("OR2", syn, group="flag")
        inv = {}
        matches = []
        for target in sorted(set(correctable)):
            lits = []
            for i in range(spec.r):
                if (target >> i) & 1:
                    lits.append(syn[i])
                else:
                    if i not in inv:
                        inv[i] = b.gate("NOT", syn[i], group="flag")
                    lits.append(inv[i])
            matches.append(b.chain("AND2", lits, group="flag"))
        any_hit = b.chain("OR2", matches, group="flag")
        if any_hit == CONST0:
            unc = err
        else:
            unc = b.gate("AND2", err, b.gate("NOT", any_hit, group="flag"), group="flag")
        outputs += [("err", err), ("unc", unc)]

    name = f"dec_{mode}_{spec.name.replace('-', '_')}"
    return Netlist(name, inputs, tuple(outputs), tuple(b.gates))


def series(first: Netlist, second: Netlist, binding: Mapping[str, str], name: str | None = None) -> Netlist:
    """Feed ``second`` from ``first``.

    ``binding`` maps each input of ``second`` to an input or output port of
    ``first``. The result has ``first``'s inputs and ``second``'s outputs.
    """
    missing = set(second.inputs) - set(binding)
    if missing:
        raise NetlistError(f"unbound inputs: {sorted(missing)}")
    first_out = dict(first.outputs)

    def up(ref):
        return ref if ref in first.inputs or ref == CONST0 else f"a_{ref}"

    gates = [Gate(f"a_{g.id}", g.kind, tuple(up(x) for x in g.inputs), g.group) for g in first.gates]
    remap = {}
    for port in second.inputs:
        src = binding[port]
        if src in first_out:
            remap[port] = up(first_out[src])
        elif src in first.inputs:
            remap[port] = src
        else:
            raise NetlistError(f"binding for {port}: {src!r} is not a port of {first.name}")

    def down(ref):
        if ref == CONST0:
            return ref
        return remap[ref] if ref in remap else f"b_{ref}"

    gates += [Gate(f"b_{g.id}", g.kind, tuple(down(x) for x in g.inputs), g.group) for g in second.gates]
    outputs = tuple((p, down(ref)) for p, ref in second.outputs)
    return Netlist(name or f"{first.name}_{second.name}", first.inputs, outputs, tuple(gates))


def codec_netlist(spec: CodeSpec, mode: str = "daec", **kwargs) -> Netlist:
    """Encoder feeding the decoder: data in, corrected data and flags out."""
    enc = emit_encoder(spec)
    dec = emit_decoder(spec, mode, **kwargs)
    binding = {f"r{j + 1}": f"d{j + 1}" for j in range(spec.k)}
    binding.update({f"r{spec.k + i + 1}": f"c{i + 1}" for i in range(spec.r)})
    return series(enc, dec, binding, name=f"codec_{mode}_{spec.name.replace('-', '_')}")


def _eval(kind, args):
    if kind == "XOR2":
        return args[0] ^ args[1]
    if kind == "AND2":
        return args[0] & args[1]
    if kind == "OR2":
        return args[0] | args[1]
    return args[0] ^ 1


def simulate(netlist: Netlist, assignment: Mapping[str, object]) -> dict:
    """Evaluate in one topological pass.

    Values may be 0/1 ints or equally shaped integer numpy arrays (one lane
    per test vector).
    """
    extra = set(assignment) - set(netlist.inputs)
    missing = set(netlist.inputs) - set(assignment)
    if extra or missing:
        raise NetlistError(f"bad assignment: missing {sorted(missing)}, extra {sorted(extra)}")
    values = dict(assignment)
    values[CONST0] = 0
    for g in netlist.gates:
        values[g.id] = _eval(g.kind, [values[x] for x in g.inputs])
    return {port: values[ref] for port, ref in netlist.outputs}


def census(netlist: Netlist, group: str | None = "core") -> GateCensus:
    """Gate counts by kind; ``group=None`` counts everything."""
    counts = {f: 0 for f in _CENSUS_FIELD.values()}
    for g in netlist.gates:
        if group is None or g.group == group:
            counts[_CENSUS_FIELD[g.kind]] += 1
    return GateCensus(**counts)


def depth(netlist: Netlist, outputs=None) -> DepthCensus:
    """Per-kind gate counts on the longest input-to-output path.

    Longest means most gates; ties go to the larger NAND2 weight. ``outputs``
    restricts the path end points (default: every output).
    """
    zero = (0, 0, (0, 0, 0, 0))
    best = {x: zero for x in netlist.inputs}
    best[CONST0] = zero
    order = list(_CENSUS_FIELD)
    for g in netlist.gates:
        length, _, counts = max(best[x] for x in g.inputs)
        c = list(counts)
        c[order.index(g.kind)] += 1
        best[g.id] = (length + 1, nand2_equiv(*c), tuple(c))
    ends = netlist.output_names if outputs is None else outputs
    refs = dict(netlist.outputs)
    top = max((best[refs[p]] for p in ends), default=zero)
    return DepthCensus(*top[2])


def data_outputs(netlist: Netlist) -> tuple[str, ...]:
    return tuple(p for p in netlist.output_names if p not in ("err", "unc"))


# Structural HDL (Verilog subset: one module, primitive gates, assigns).

_PRIM = {"XOR2": "xor", "AND2": "and", "OR2": "or", "NOT": "not"}
_KIND_OF = {v: k for k, v in _PRIM.items()}


def serialize_hdl(netlist: Netlist, module_name: str | None = None) -> str:
    name = module_name or netlist.name
    ports = list(netlist.inputs) + [p for p, _ in netlist.outputs]
    lines = [f"module {name} ({', '.join(ports)});"]
    lines += [f"  input {p};" for p in netlist.inputs]
    lines += [f"  output {p};" for p, _ in netlist.outputs]
    for g in netlist.gates:
        lines.append(f"  wire {g.id};")
    for g in netlist.gates:
        attr = "(* flag *) " if g.group == "flag" else ""
        lines.append(f"  {attr}{_PRIM[g.kind]} u_{g.id} ({g.id}, {', '.join(g.inputs)});")
    for p, ref in netlist.outputs:
        lines.append(f"  assign {p} = {ref};")
    lines.append("endmodule")
    return "\n".join(lines) + "\n"


_MODULE_RE = re.compile(r"^module\s+(\w+)\s*\(([^)]*)\);$")
_GATE_RE = re.compile(r"^(\(\*\s*flag\s*\*\)\s*)?(xor|and|or|not)\s+\w+\s*\(([^)]*)\);$")
_ASSIGN_RE = re.compile(r"^assign\s+(\w+)\s*=\s*([\w']+);$")


def parse_hdl(text: str) -> Netlist:
    """Read back the subset written by :func:`serialize_hdl`."""
    name = None
    inputs, outputs, gates = [], [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("//")[0].strip()
        if not line or line == "endmodule" or line.startswith("wire "):
            continue
        if m := _MODULE_RE.match(line):
            name = m.group(1)
        elif line.startswith("input "):
            inputs.append(line[6:].rstrip(";").strip())
        elif line.startswith("output "):
            continue
        elif m := _GATE_RE.match(line):
            pins = [p.strip() for p in m.group(3).split(",")]
            group = "flag" if m.group(1) else "core"
            gates.append(Gate(pins[0], _KIND_OF[m.group(2)], tuple(pins[1:]), group))
        elif m := _ASSIGN_RE.match(line):
            outputs.append((m.group(1), m.group(2)))
        else:
            raise NetlistError(f"line {lineno}: cannot parse {raw.strip()!r}")
    if name is None:
        raise NetlistError("no module header")
    return Netlist(name, tuple(inputs), tuple(outputs), tuple(gates))


def to_record(netlist: Netlist) -> dict:
    """Plain-data form for JSON export."""
    return {
        "name": netlist.name,
        "inputs": list(netlist.inputs),
        "outputs": [list(o) for o in netlist.outputs],
        "gates": [
            {"id": g.id, "kind": g.kind, "inputs": list(g.inputs), "group": g.group}
            for g in netlist.gates
        ],
    }


def _lanes(words, width, prefix):
    words = np.asarray(words, dtype=np.uint64)
    return {
        f"{prefix}{j + 1}": ((words >> np.uint64(j)) & np.uint64(1)).astype(np.uint8)
        for j in range(width)
    }


def decoder_mismatches(spec: CodeSpec, mode: str, words, netlist: Netlist | None = None) -> int:
    """Count received words where the gate-level decoder disagrees with the codec.

    Agreement means: ``err`` is set iff the syndrome is nonzero, ``unc`` is
    set iff the codec reports an uncorrectable word, and otherwise the
    corrected data bits are identical.
    """
    nl = netlist or emit_decoder(spec, mode)
    words = np.asarray(words, dtype=np.uint64)
    out = simulate(nl, _lanes(words, spec.n, "r"))
    kinds, _, corrected = decode_packed(spec, words, mode)
    bad = out["err"] != (kinds != Kind.NO_ERROR)
    unc = kinds == Kind.DETECTED_UNCORRECTABLE
    bad |= out["unc"] != unc
    for j in range(spec.k):
        want = ((corrected >> np.uint64(j)) & np.uint64(1)).astype(np.uint8)
        bad |= ~unc & (out[f"q{j + 1}"] != want)
    return int(np.count_nonzero(bad))


def encoder_mismatches(spec: CodeSpec, data, netlist: Netlist | None = None) -> int:
    nl = netlist or emit_encoder(spec)
    data = np.asarray(data, dtype=np.uint64)
    out = simulate(nl, _lanes(data, spec.k, "d"))
    checks = encode_packed(spec, data) >> np.uint64(spec.k)
    bad = np.zeros(data.shape, dtype=bool)
    for i in range(spec.r):
        want = ((checks >> np.uint64(i)) & np.uint64(1)).astype(np.uint8)
        got = np.broadcast_to(np.asarray(out[f"c{i + 1}"], dtype=np.uint8), data.shape)
        bad |= got != want
    return int(np.count_nonzero(bad))
