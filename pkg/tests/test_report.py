import pytest

from bpaprob import compare, make_frame, make_mass
from bpaprob.report import METHODS, compare_many, format_csv, format_table
from helpers import random_bayesians, random_bpas


def test_example2_entropy_match_is_best(example2):
    report = compare(example2)
    assert [r.method for r in report.rows] == list(METHODS)
    row = report.row("entropy-match")
    assert row.distribution.probs == pytest.approx((0.4, 0.3, 0.3), abs=1e-6)
    assert report.best().method == "entropy-match"
    for r in report.rows:
        assert row.gap <= r.gap
    assert row.argmax == "w1"


def test_vacuous_skips_relative_belief(example1):
    report = compare(example1)
    rb = report.row("relative-belief")
    assert rb.distribution is None
    assert "singleton beliefs are zero" in rb.skipped
    for method in ("pignistic", "plausibility", "proportional", "entropy-match"):
        assert report.row(method).distribution.probs == pytest.approx((0.25,) * 4)


def test_bayesian_all_identical():
    for m in random_bayesians(20, seed=1):
        report = compare(m)
        expected = [0.0] * m.frame.n
        for fs, v in m.focal:
            expected[fs.members()[0]] = v
        for r in report.rows:
            assert r.distribution.probs == pytest.approx(expected, abs=1e-12)
            assert r.gap == pytest.approx(0.0, abs=1e-12)


def test_never_raises_and_one_row_per_method():
    for m in random_bpas(60, seed=2):
        report = compare(m)
        assert len(report.rows) == len(METHODS)
        for r in report.rows:
            assert (r.distribution is None) == (r.skipped is not None)


def test_failure_becomes_skip(example2, monkeypatch):
    def boom(m):
        raise ZeroDivisionError("synthetic")

    monkeypatch.setitem(__import__("bpaprob.report").report.BASELINES, "pignistic", boom)
    row = compare(example2).row("pignistic")
    assert row.skipped.startswith("ZeroDivisionError")


def test_batch_order_independent_of_workers():
    ms = random_bpas(6, seed=3)
    serial = compare_many(ms, jobs=1)
    parallel = compare_many(ms, jobs=2)
    for a, b in zip(serial, parallel):
        assert [r.distribution and r.distribution.probs for r in a.rows] == [
            r.distribution and r.distribution.probs for r in b.rows
        ]


def test_table_and_csv(example1, example2):
    text = format_table(compare(example2))
    assert "entropy base: 2 (bits)" in text
    assert "entropy-match    0.400000  0.300000  0.300000" in text
    csv_text = format_csv([compare(example1), compare(example2)], ["ex1", "ex2"])
    lines = csv_text.strip().splitlines()
    assert lines[0].startswith("source,method")
    assert len(lines) == 1 + 2 * len(METHODS)
    assert any("relative-belief" in ln and "UndefinedTransformError" in ln for ln in lines)
