import numpy as np
import pytest

from secdaec.codec import decode_daec, encode
from secdaec.complexity import area, delay
from secdaec.gf2 import BitVector
from secdaec.netlist import (
    CONST0,
    Gate,
    Netlist,
    NetlistError,
    census,
    codec_netlist,
    data_outputs,
    decoder_mismatches,
    depth,
    emit_decoder,
    emit_encoder,
    encoder_mismatches,
    parse_hdl,
    serialize_hdl,
    simulate,
    to_record,
)
from secdaec.registry import builtin, construct

S83 = builtin("8-3")


def test_encoder_gate_counts():
    assert census(emit_encoder(S83)).xor2 == 4
    assert builtin("14-8").data_row_weights == (4, 5, 5, 4, 2, 4)
    assert census(emit_encoder(builtin("14-8"))).xor2 == 18


def test_weight_one_row_is_a_wire():
    enc = emit_encoder(S83)
    assert dict(enc.outputs)["c2"] == "d2"


def test_encoder_simulation_example():
    out = simulate(emit_encoder(S83), {"d1": 1, "d2": 0, "d3": 1})
    assert [out[f"c{i}"] for i in range(1, 6)] == [1, 0, 1, 0, 0]
    zero = simulate(emit_encoder(S83), {"d1": 0, "d2": 0, "d3": 0})
    assert not any(zero.values())


def test_simulate_rejects_bad_assignment():
    enc = emit_encoder(S83)
    with pytest.raises(NetlistError, match="missing"):
        simulate(enc, {"d1": 1})
    with pytest.raises(NetlistError, match="extra"):
        simulate(enc, {"d1": 1, "d2": 0, "d3": 1, "x": 0})


def test_netlist_validation():
    with pytest.raises(NetlistError):
        Netlist("bad", ("a",), (("y", "g1"),), (Gate("g1", "XOR2", ("a", "g2")),))
    with pytest.raises(NetlistError):
        Netlist("bad", ("a", "b"), (), (Gate("g1", "NOT", ("a", "b")),))
    with pytest.raises(NetlistError):
        Netlist("bad", ("a",), (("y", "zz"),))


def test_empty_netlist_census():
    nl = Netlist("wires", ("a",), (("y", "a"), ("z", CONST0)))
    assert census(nl).counts() == (0, 0, 0, 0)
    assert depth(nl).counts() == (0, 0, 0, 0)


def test_secded_8_3_census_matches_area():
    nl = codec_netlist(S83, "secded")
    assert census(nl).counts() == (16, 6, 0, 0)


def test_daec_8_3_or_count():
    assert census(emit_decoder(S83, "daec")).or2 == 5


def test_daec_8_3_and_counts():
    # per-bit detectors: 3 gated singles x 3 + 5 pair uses x 3
    assert census(emit_decoder(S83, "daec")).and2 == 24
    # sharing pair detectors between neighbouring bits
    assert census(emit_decoder(S83, "daec", shared=True)).and2 == 18


def test_combined_census_and_depth(spec):
    for mode in ("secded", "daec"):
        nl = codec_netlist(spec, mode)
        assert census(nl) == area(spec, mode)
        assert depth(nl, data_outputs(nl)) == delay(spec, mode)


def test_census_14_8_secded():
    assert census(codec_netlist(builtin("14-8"), "secded")).counts() == (50, 16, 0, 0)


def test_depth_13_7_secded():
    nl = codec_netlist(builtin("13-7"), "secded")
    d = depth(nl, data_outputs(nl))
    assert (d.xor2, d.and2) == (10, 2)


def test_flag_logic_kept_separate():
    nl = emit_decoder(builtin("14-8"), "daec")
    assert census(nl, None) == census(nl) + census(nl, "flag")
    assert census(nl, "flag").and2 > 0


def test_decoder_on_clean_codeword():
    nl = emit_decoder(S83, "daec")
    cw = encode(S83, BitVector((1, 1, 0)))
    out = simulate(nl, {f"r{j + 1}": b for j, b in enumerate(cw)})
    assert [out["q1"], out["q2"], out["q3"]] == [1, 1, 0]
    assert out["err"] == 0 and out["unc"] == 0


def test_decoder_scalar_equivalence_8_3():
    nl = emit_decoder(S83, "daec")
    for w in range(256):
        r = BitVector.from_int(w, 8)
        out = simulate(nl, {f"r{j + 1}": b for j, b in enumerate(r)})
        ref = decode_daec(S83, r)
        assert out["unc"] == (not ref.correctable)
        if ref.correctable:
            assert tuple(out[f"q{j}"] for j in (1, 2, 3)) == ref.data.bits


@pytest.mark.parametrize("name", ["8-3", "9-4", "11-5", "13-7", "14-8"])
@pytest.mark.parametrize("mode", ["secded", "daec"])
def test_decoder_exhaustive_equivalence(name, mode):
    spec = builtin(name)
    assert decoder_mismatches(spec, mode, np.arange(1 << spec.n)) == 0
    assert encoder_mismatches(spec, np.arange(1 << spec.k)) == 0


@pytest.mark.parametrize("mode", ["secded", "daec"])
def test_decoder_sampled_equivalence_24_16(mode):
    spec = builtin("24-16")
    words = np.random.default_rng(24).integers(0, 1 << 24, 100_000)
    assert decoder_mismatches(spec, mode, words) == 0
    assert encoder_mismatches(spec, words & 0xFFFF) == 0


def test_mismatch_check_is_not_vacuous():
    nl = emit_decoder(S83, "daec")
    gates = list(nl.gates)
    i = next(i for i, g in enumerate(gates) if g.kind == "OR2")
    gates[i] = Gate(gates[i].id, "AND2", gates[i].inputs, gates[i].group)
    broken = Netlist(nl.name, nl.inputs, nl.outputs, tuple(gates))
    assert decoder_mismatches(S83, "daec", np.arange(256), netlist=broken) > 0


def test_ungated_single_detectors_would_miscorrect():
    # pair (d2, d3) has syndrome {1,2,4,5}, which contains column d1 = {1,4,5}
    s = S83.pair_signatures[1].to_int()
    d1 = S83.column_ints[0]
    assert s & d1 == d1


def test_constructed_codes_are_equivalent():
    for k in (3, 5, 8):
        spec = construct(k)
        for mode in ("secded", "daec"):
            assert decoder_mismatches(spec, mode, np.arange(1 << spec.n)) == 0


def test_hdl_encoder_instances():
    text = serialize_hdl(emit_encoder(S83))
    assert text.count("  xor ") == 4
    assert text.startswith("module enc_8_3 (")


def test_hdl_is_deterministic(spec):
    a = serialize_hdl(emit_decoder(spec, "daec"))
    b = serialize_hdl(emit_decoder(builtin(spec.name), "daec"))
    assert a.encode() == b.encode()


def test_hdl_round_trip():
    rng = np.random.default_rng(5)
    for nl in (emit_encoder(S83), emit_decoder(S83, "daec"), codec_netlist(builtin("14-8"), "secded")):
        again = parse_hdl(serialize_hdl(nl))
        assert census(again, None) == census(nl, None)
        assert census(again) == census(nl)
        assign = {p: rng.integers(0, 2, 1000).astype(np.uint8) for p in nl.inputs}
        a, b = simulate(nl, assign), simulate(again, assign)
        assert all((np.asarray(a[p]) == np.asarray(b[p])).all() for p in a)


def test_hdl_parse_error():
    with pytest.raises(NetlistError, match="line 2"):
        parse_hdl("module m (a);\n  nand u1 (x, a, a);\nendmodule\n")


@pytest.mark.slow
def test_hdl_round_trip_24_16_daec():
    spec = builtin("24-16")
    again = parse_hdl(serialize_hdl(emit_decoder(spec, "daec")))
    words = np.random.default_rng(99).integers(0, 1 << 24, 100_000)
    assert decoder_mismatches(spec, "daec", words, netlist=again) == 0


def test_record_export():
    rec = to_record(emit_encoder(S83))
    assert rec["inputs"] == ["d1", "d2", "d3"]
    assert len(rec["gates"]) == 4
