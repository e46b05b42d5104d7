import math

import pytest

import boolinfo


def h(p):
    return -sum(x * math.log2(x) for x in (p, 1 - p) if x > 0)


def test_dictator_attains_one_minus_h():
    dictator = boolinfo.TruthTable.initial_segment(5, 16)
    assert dictator.hex == "n=5:0000ffff"
    assert boolinfo.mutual_info(dictator, 0.1) == pytest.approx(1 - h(0.1), abs=1e-12)
    assert boolinfo.sum_single_mi(dictator, 0.1) == pytest.approx(1 - h(0.1), abs=1e-12)


def test_table_round_trip_and_points():
    table = boolinfo.TruthTable.from_points(3, [0, 1, 3, 5])
    assert boolinfo.TruthTable.from_hex(table.hex) == table
    assert table.points() == [0, 1, 3, 5]
    assert len(table) == 4
    assert repr(table) == "TruthTable('n=3:2b')"
    assert boolinfo.compress(table, [2, 3]).points() == [0, 1, 2, 4]


def test_posterior_paths_agree():
    table = boolinfo.TruthTable.from_hex("n=5:0008088e")
    fast = boolinfo.posterior(table, 0.2)
    slow = boolinfo.posterior(table, 0.2, naive=True)
    assert len(fast) == 32
    assert max(abs(a - b) for a, b in zip(fast, slow)) < 1e-12


def test_enumeration_counts():
    assert [len(boolinfo.enumerate_sn(n)) for n in range(1, 6)] == [3, 5, 10, 27, 119]
    with pytest.raises(boolinfo.CapExceeded):
        boolinfo.enumerate_sn(8)
    assert all(boolinfo.in_compressed_family(t) for t in boolinfo.enumerate_sn(4))


def test_chord_certificate():
    cert = boolinfo.test_inequality(0.1)
    assert cert["status"] == "VERIFIED"
    assert len(cert["chords"]) == 3
    with pytest.raises(ValueError):
        boolinfo.test_inequality(0.5)
    certs = boolinfo.sweep(0.1, 0.3, 0.1)
    assert [c["status"] for c in certs] == ["VERIFIED"] * 3


def test_t_alpha_and_takagi():
    assert boolinfo.t_alpha(1, 1, 0.1) == pytest.approx(h(0.1) / 2, abs=1e-15)
    assert boolinfo.takagi(2, 1) == 0.5
    assert boolinfo.takagi_limit_gap(2, 3, 1e-6) < 0.1


def test_drivers():
    assert boolinfo.verify_conj2(4, [0.1, 0.3])["outcome"] == "PASS"
    conj1 = boolinfo.verify_conj1(4, [0.1])
    assert conj1["outcome"] == "PASS"
    assert "timing" not in conj1
    assert conj1["witnesses"][0]["note"] == "maximizer is the dictator"
    assert boolinfo.verify_harper(3)["outcome"] == "PASS"
    assert boolinfo.verify_sum_inequality(3, [0.2])["outcome"] == "PASS"
    triple = boolinfo.verify_triple_counterexample([0.2])
    assert triple["outcome"] == "PASS"
    assert triple["witnesses"][0]["table"] == "n=5:0008088e"


def test_triple_counterexample_direct():
    assert boolinfo.find_triple_counterexample(4, 0.2) is None
    table, coords, delta = boolinfo.find_triple_counterexample(5, 0.2)
    assert coords == [1, 2, 3]
    after = boolinfo.cond_entropy(boolinfo.compress(table, coords), 0.2)
    assert after - boolinfo.cond_entropy(table, 0.2) == pytest.approx(delta, abs=1e-15)
