"""Verification engine behaviour."""

import pytest

from bilorentz.verify import format_report, run_verification


def test_default_checks_all_pass():
    report = run_verification(trials=5000, seed=1)
    assert report.passed
    assert len(report.checks) == 13


def test_check_names_are_unique():
    report = run_verification(trials=1000, seed=0)
    names = [c.name for c in report.checks]
    assert len(set(names)) == len(names)


def test_reports_are_reproducible():
    first = run_verification(trials=3000, seed=9)
    second = run_verification(trials=3000, seed=9)
    assert first == second
    assert format_report(first) == format_report(second)


def test_different_seeds_still_pass():
    assert run_verification(trials=3000, seed=1).passed
    assert run_verification(trials=3000, seed=2).passed


def test_report_mentions_every_check(capsys):
    report = run_verification(trials=1000, seed=0)
    text = format_report(report)
    for check in report.checks:
        assert check.name in text
    assert text.count("PASS") == len(report.checks)


def test_rejects_nonpositive_trials():
    with pytest.raises(ValueError):
        run_verification(trials=0)
