"""One test per acceptance criterion; each records a PASS/FAIL line in the terminal summary."""

import time

import numpy as np
import pytest

from secdaec.complexity import (
    PUBLISHED_AREA,
    PUBLISHED_DELAY,
    area_daec,
    area_secded,
    delay_daec,
    delay_secded,
    published,
)
from secdaec.netlist import (
    census,
    codec_netlist,
    decoder_mismatches,
    emit_decoder,
    emit_encoder,
    encoder_mismatches,
    serialize_hdl,
)
from secdaec.registry import InfeasibleError, all_builtin, available, builtin, construct, parity_bound, q_matrix
from secdaec.verifier import oracle_mismatches, verify_code

SMALL = ["8-3", "9-4", "11-5", "13-7", "14-8"]


def test_c01_nand2_calibration(record_criterion):
    rows = PUBLISHED_AREA + PUBLISHED_DELAY
    bad = [(r.group, r.scheme, r.code) for r in rows if r.census.nand2_equiv != r.nand2]
    ok = record_criterion("C1 NAND2 weights reproduce every published row", not bad, f"{len(rows)} rows, {len(bad)} off")
    assert ok, bad


def test_c02_registry(record_criterion):
    problems = {s.name: s.violations() for s in all_builtin() if s.violations()}
    figure = [
        [1, 1, 1, 3, 1, 2, 1, 1],
        [2, 3, 4, 4, 2, 3, 2, 3],
        [4, 5, 5, 5, 3, 4, 4, 4],
        [5, 6, 6, 6, 4, 6, 6, 6],
    ]
    q_ok = q_matrix(builtin("14-8")).as_rows() == figure
    ok = record_criterion(
        "C2 builtin matrices valid, 14-8 Q-matrix matches figure",
        not problems and q_ok and len(available()) == 6,
        f"violations={problems or 'none'}, q_match={q_ok}",
    )
    assert ok


def test_c03_functional_fast_tier(record_criterion):
    t0 = time.perf_counter()
    reports = {s.name: verify_code(s, "daec") for s in all_builtin()}
    verified = all(r.sec_ok and r.daec_ok for r in reports.values())
    counts = all((r.singles_checked, r.pairs_checked) == (s.n, s.n - 1) for s, r in zip(all_builtin(), reports.values()))
    mism = {name: oracle_mismatches(builtin(name), "daec") for name in SMALL}
    elapsed = time.perf_counter() - t0
    ok = record_criterion(
        "C3 sec/daec verified for six codes, decode == oracle exhaustively for n<=14",
        verified and counts and not any(mism.values()) and elapsed < 1.0,
        f"{elapsed:.2f}s",
    )
    assert ok


@pytest.mark.slow
def test_c03_functional_slow_tier(record_criterion):
    t0 = time.perf_counter()
    mism = oracle_mismatches(builtin("24-16"), "daec")
    elapsed = time.perf_counter() - t0
    ok = record_criterion("C3 (slow) decode == oracle on all 2^24 words of 24-16", mism == 0 and elapsed < 120, f"{mism} mismatches, {elapsed:.1f}s")
    assert ok


def test_c04_nonadjacent_report(record_criterion):
    rep = verify_code(builtin("8-3"), "daec")
    w = [x for x in rep.nonadjacent_witnesses if x.pattern == (1, 5)]
    witness_ok = bool(w) and w[0].syndrome == "11011" and rep.nonadjacent_double_stats.miscorrected_adjacent >= 1
    partitions = True
    for s in all_builtin():
        st = verify_code(s, "daec").nonadjacent_double_stats
        parts = st.detected + st.miscorrected_single + st.miscorrected_adjacent + st.aliased_to_zero
        partitions &= parts == st.total == s.n * (s.n - 1) // 2 - (s.n - 1)
    ok = record_criterion(
        "C4 8-3 aliasing witness (d1,p2)->11011 found, dispositions partition",
        witness_ok and partitions,
        f"8-3 aliased to adjacent: {rep.nonadjacent_double_stats.miscorrected_adjacent}/21",
    )
    assert ok


def test_c05_area_secded(record_criterion):
    expected = {"8-3": (16, 6, 76), "9-4": (23, 8, 108), "11-5": (29, 10, 136), "13-7": (43, 14, 200), "14-8": (50, 16, 232)}
    got = {k: (a.xor2, a.and2, a.nand2_equiv) for k in expected for a in [area_secded(builtin(k))]}
    big = area_secded(builtin("24-16"))
    pub = published("area", "proposed-secded", "24-16").census
    ok = record_criterion(
        "C5a area_secded matches five rows; 24-16 deviation recorded",
        got == expected and big.xor2 == 104 and pub.xor2 == 120 and big.and2 == pub.and2,
        f"24-16 XOR2 model {big.xor2} vs published {pub.xor2}",
    )
    assert ok


def test_c05_area_daec_structure(record_criterion):
    ok = True
    for s in all_builtin():
        a, pub = area_daec(s), published("area", "proposed-daec", s.name).census
        ok &= a.or2 == pub.or2 == 2 * s.k - 1
        ok &= a.and2 == pub.and2
        ok &= a.xor2 - area_secded(s).xor2 == s.n - s.k - 1
    ok = record_criterion("C5b area_daec OR2=2k-1, AND2 and XOR2 delta n-k-1 for six codes", ok)
    assert ok


@pytest.mark.xfail(strict=True, reason="published 24-16 DAEC XOR2 (127) exceeds the matrix-derived 111")
def test_c05_area_daec_exact_rows(record_criterion):
    off = {}
    for s in all_builtin():
        a, pub = area_daec(s), published("area", "proposed-daec", s.name).census
        if a != pub:
            off[s.name] = f"XOR2 {a.xor2} vs {pub.xor2}"
    record_criterion("C5c area_daec matches all six published rows exactly", not off, str(off or "all six"))
    assert not off


def test_c06_delay(record_criterion):
    off = []
    for s in all_builtin():
        if delay_secded(s) != published("delay", "proposed-secded", s.name).census:
            off.append(("secded", s.name))
        if delay_daec(s) != published("delay", "proposed-daec", s.name).census:
            off.append(("daec", s.name))
    d1, d2 = delay_secded(builtin("24-16")), delay_daec(builtin("14-8"))
    examples = d1.counts()[:2] == (16, 2) and d1.nand2_equiv == 68 and d2.counts()[:3] == (15, 3, 2) and d2.nand2_equiv == 72
    ok = record_criterion("C6 delay models match all twelve proposed rows", not off and examples, str(off or "12/12"))
    assert ok


def test_c07_parity_bound(record_criterion):
    got = [parity_bound(k).value for k in range(3, 9)]
    ok = record_criterion("C7 parity bound for k=3..8 is 5,5,6,6,6,6", got == [5, 5, 6, 6, 6, 6], str(got))
    assert ok


def test_c08_netlist_equivalence(record_criterion):
    mism = 0
    for name in SMALL:
        s = builtin(name)
        for mode in ("secded", "daec"):
            mism += decoder_mismatches(s, mode, np.arange(1 << s.n))
        mism += encoder_mismatches(s, np.arange(1 << s.k))
    big = builtin("24-16")
    words = np.random.default_rng(2024).integers(0, 1 << 24, 100_000)
    for mode in ("secded", "daec"):
        mism += decoder_mismatches(big, mode, words)
    mism += encoder_mismatches(big, words & 0xFFFF)
    census_ok = all(census(codec_netlist(builtin(n), "secded")) == area_secded(builtin(n)) for n in SMALL)
    det = all(
        serialize_hdl(f(builtin(n), *m)).encode() == serialize_hdl(f(builtin(n), *m)).encode()
        for n in available()
        for f, m in ((emit_encoder, ()), (emit_decoder, ("daec",)))
    )
    ok = record_criterion(
        "C8 netlists equal codec, secded census equals area model, HDL deterministic",
        mism == 0 and census_ok and det,
        f"{mism} mismatches",
    )
    assert ok


def test_c09_construction(record_criterion):
    specs = [construct(3), construct(8)]
    budgets = [s.r == parity_bound(s.k).value for s in specs]
    verified = [verify_code(s, "daec") for s in specs]
    oracle = [oracle_mismatches(s, "daec") for s in specs]
    try:
        construct(3, parity=3)
        infeasible = False
    except InfeasibleError:
        infeasible = True
    ok = record_criterion(
        "C9 construct(3), construct(8) verify at bound; construct(3, parity=3) infeasible",
        all(budgets) and all(r.sec_ok and r.daec_ok for r in verified) and not any(oracle) and infeasible,
        f"n={[s.n for s in specs]}",
    )
    assert ok


def test_c10_physical_table_out_of_scope(record_criterion):
    # silicon area, power and timing need a cell library; nothing here models them
    import secdaec.complexity as cx

    ok = record_criterion("C10 physical area/power/delay not modelled", not hasattr(cx, "PUBLISHED_PHYSICAL"))
    assert ok
