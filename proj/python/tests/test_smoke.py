import json

import pytest

import circtc


def test_graph_basics():
    assert circtc.degree(18, [1, 2, 3, 4]) == 8
    assert len(circtc.edges(6, [1])) == 6


def test_latin_square():
    assert circtc.latin_square(3) == [[1, 3, 2], [3, 2, 1], [2, 1, 3]]
    with pytest.raises(circtc.CirctcError):
        circtc.latin_square(4)


def test_power_cycle_tables():
    eq, nsd = circtc.equitable_nsd_power_cycle(18, 4)
    assert eq["colors_used"] == 9
    assert eq["equitable"]
    assert eq["matrix"][0][:5] == [1, 6, 2, 7, 3]
    assert nsd["colors_used"] == 11
    assert nsd["matrix"][0][1] == 10
    assert nsd["matrix"][0][17] == 11
    assert circtc.power_cycle_odd(21, 6, 1)["colors_used"] <= 14


def test_circulant_builders():
    assert circtc.thm32(24, [1, 3, 4, 5, 10])["colors_used"] == 13
    assert circtc.thm31(20, [1, 2, 3, 4, 5, 7, 8], [1, 2, 3, 4, 5])["colors_used"] <= 16
    assert circtc.thm33(24, [1, 2, 3, 4, 5, 7, 10], [1, 3, 4, 5, 10])["colors_used"] <= 17
    eq, nsd = circtc.thm34(18, [1, 2, 4, 6, 7, 8], [1, 2, 4, 6])
    assert (eq["colors_used"], nsd["colors_used"]) == (13, 15)
    with pytest.raises(circtc.CirctcError, match="PreconditionFailed"):
        circtc.thm32(8, [1, 3])


def test_verify_round_trip():
    report = circtc.power_cycle_even(6, 1, 2)
    verdict = circtc.verify(6, [1], report["json"])
    assert verdict["proper"] and verdict["colors_used"] == 3
    bad = json.loads(report["json"])
    bad["vertex_colors"][1] = bad["vertex_colors"][0]
    assert not circtc.verify(6, [1], json.dumps(bad))["proper"]


def test_factorization_and_oracle():
    factors = circtc.one_factorize(4, [1, 2])
    assert len(factors) == 3 and all(len(f) == 2 for f in factors)
    assert circtc.total_chromatic(5, [1], 6) == 4


def test_reproduce():
    for table in range(1, 7):
        compared, wildcards, mismatches = circtc.reproduce(table)
        assert mismatches == []
        assert compared > 0
