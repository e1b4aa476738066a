"""Smoke tests for the python bindings: closed-form anchor values, the
run-report contract, coupling-graph statistics, and error translation."""

import cmath
import math

import pytest

import platjones

GOLDEN_K = 5


def closed_form_trefoil(k):
    """-q^4 + q^3 + q at q = exp(-2*pi*i/k); the mirror value is its
    image under q -> 1/q."""
    q = cmath.exp(-2j * cmath.pi / k)
    return -q**4 + q**3 + q


def test_unknot_evaluates_to_one():
    value = platjones.extended_jones(2, ["1/2"], GOLDEN_K)
    assert value == 1


def test_trefoil_matches_closed_form():
    value = platjones.extended_jones(4, ["1/2", "1/2"], GOLDEN_K, "s2 s2 s2")
    golden = closed_form_trefoil(GOLDEN_K)
    mirror = closed_form_trefoil(GOLDEN_K).conjugate()
    assert min(abs(value - golden), abs(value - mirror)) < 1e-9


def test_run_report_contract():
    report = platjones.run(4, ["1/2", "1/2"], GOLDEN_K, "s2 s2 s2")
    assert report["word_length"] == 3
    assert 0.0 <= report["probability"] <= 1.0
    assert abs(report["probability"] - (report["re"] ** 2 + report["im"] ** 2)) < 1e-12
    assert report["moves"] <= report["bound"] * report["word_length"]


def test_ledger_matches_report():
    moves, bound = platjones.complexity_ledger(6, ["1", "1", "1"], 7, "s3 s2 s4 s3")
    assert moves <= bound
    assert bound == pytest.approx(4 * (5 * math.log(5) + 1))


def test_writhe_counts_signed_crossings():
    assert platjones.writhe(4, ["1/2", "1/2"], GOLDEN_K, "s2 s2 s2") == 3
    assert platjones.writhe(4, ["1/2", "1/2"], GOLDEN_K, "s2 s2^-1") == 0


def test_qdim_golden_ratio():
    assert platjones.qdim("1/2", GOLDEN_K) == pytest.approx((1 + math.sqrt(5)) / 2)


def test_graph_stats_twist_anchor():
    stats = platjones.graph_stats(3, twists=True)
    assert stats["vertices"] == 120
    assert stats["edges"] == 480
    assert stats["diameter"] == 8


def test_growth_table_monotone():
    rows = platjones.growth_table(8)
    diameters = [diameter for _, diameter, _ in rows]
    assert diameters == sorted(diameters)
    assert all(diameter <= bound for _, diameter, bound in rows)


def test_catalog_round_trip():
    entries = platjones.catalog()
    spec = entries["trefoil-right"]
    value = platjones.extended_jones(
        spec["strands"], spec["colors"], spec["level"], spec["word"], spec["orientations"]
    )
    golden = closed_form_trefoil(spec["level"])
    mirror = golden.conjugate()
    assert min(abs(value - golden), abs(value - mirror)) < 1e-9


def test_errors_translate_to_value_error():
    with pytest.raises(ValueError):
        platjones.extended_jones(4, ["1/2", "1"], GOLDEN_K)  # unequal cap colors
    with pytest.raises(ValueError):
        platjones.extended_jones(4, ["1/2", "1/2"], GOLDEN_K, "sx")  # bad word
    with pytest.raises(ValueError):
        platjones.extended_jones(4, ["1/2", "1/2"], GOLDEN_K, "", "+x-+")  # bad pattern
