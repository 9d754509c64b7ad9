import json

import pytest

from secdaec.cli import main
from secdaec.netlist import census, parse_hdl


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_encode(capsys):
    assert run(capsys, "encode", "--code", "8-3", "--data", "101")[:2] == (0, "10110100\n")


def test_encode_bad_bits(capsys):
    code, _, err = run(capsys, "encode", "--code", "8-3", "--data", "1x1")
    assert code == 2
    assert "'x'" in err


def test_unknown_code(capsys):
    code, _, err = run(capsys, "encode", "--code", "12-6", "--data", "101010")
    assert code == 2 and "available" in err


def test_unknown_flag():
    with pytest.raises(SystemExit) as exc:
        main(["encode", "--bogus"])
    assert exc.value.code == 2


def test_env_default_code(capsys, monkeypatch):
    monkeypatch.setenv("SECDAEC_CODE", "8-3")
    assert run(capsys, "encode", "--data", "101")[1] == "10110100\n"


def test_codes(capsys):
    code, rec = run_json(capsys, "codes", "list")
    assert [c["name"] for c in rec["codes"]] == ["8-3", "9-4", "11-5", "13-7", "14-8", "24-16"]
    code, rec = run_json(capsys, "codes", "show", "--code", "14-8")
    assert rec["q"][-1] == [1, 3, 4, 6]
    assert len(rec["h"]) == 6


def test_bound(capsys):
    assert run_json(capsys, "bound", "--k", "4")[1]["parity"] == 5
    code, out, _ = run(capsys, "bound", "--k", "16")
    assert code == 0 and "warning" in out


def test_decode(capsys):
    code, rec = run_json(capsys, "decode", "--code", "8-3", "--mode", "daec", "--word", "10000100")
    assert rec["kind"] == "ADJACENT_CORRECTED"
    assert rec["position"] == 3
    assert rec["data"] == "101"
    assert rec["syndrome"] == "10111"


def test_inject(capsys):
    assert run(capsys, "inject", "--word", "10110100", "--flip", "3,4")[1] == "10000100\n"
    assert run(capsys, "inject", "--word", "101", "--flip", "4")[0] == 2


def test_verify(capsys):
    code, rec = run_json(capsys, "verify", "--code", "14-8", "--mode", "daec", "--exhaustive")
    assert code == 0
    assert rec["sec_ok"] and rec["daec_ok"]
    assert (rec["singles_checked"], rec["pairs_checked"]) == (14, 13)
    assert rec["oracle_mismatches"] == 0
    counts = rec["nonadjacent_double_stats"]
    assert counts["total"] == sum(v for k, v in counts.items() if k != "total")


def test_complexity(capsys):
    code, rec = run_json(capsys, "complexity", "--code", "14-8", "--mode", "secded")
    assert rec["area"]["XOR2"] == 50 and rec["area"]["AND2"] == 16 and rec["area"]["NAND2"] == 232
    code, out, _ = run(capsys, "complexity", "--table")
    assert "(24, 16)" in out and "Critical path" in out


def test_netlist_file(capsys, tmp_path):
    out = tmp_path / "enc.v"
    code, rec = run_json(capsys, "netlist", "--code", "8-3", "--target", "encoder", "--out", str(out))
    assert code == 0
    assert census(parse_hdl(out.read_text())).xor2 == 4 == rec["census_core"]["XOR2"]


def test_campaign_deterministic(capsys):
    argv = ("campaign", "--code", "9-4", "--mode", "daec", "--trials", "200", "--model", "adjacent-double", "--seed", "7")
    a = run(capsys, *argv, "--json")[1]
    b = run(capsys, *argv, "--json")[1]
    assert a == b
    assert json.loads(a)["counts"]["corrected"] == 200


def test_campaign_bernoulli_inline_probability(capsys):
    code, rec = run_json(capsys, "campaign", "--code", "8-3", "--trials", "50", "--model", "bernoulli:0.2")
    assert rec["config"]["p"] == 0.2
    assert run(capsys, "campaign", "--code", "8-3", "--model", "bernoulli:x")[0] == 2
