"""Acceptance criteria 1-10, one PASS/FAIL line each.

Criteria 1-9 are the numbered suites at seed 0.  Criterion 10 runs the
suites a second time and requires a byte-identical JSON report.
"""

from __future__ import annotations

import pytest

from npsgames.io import dumps
from npsgames.suite import SUITES, run_all

SEED = 0


@pytest.fixture(scope="module")
def first_run() -> dict:
    return run_all(SEED)


def _line(number: int, title: str, passed: bool, note: str = "") -> None:
    print(f"\n{'PASS' if passed else 'FAIL'} criterion {number}: {title}{note}")


@pytest.mark.parametrize("number", sorted(SUITES))
def test_criterion(first_run, number):
    result = next(r for r in first_run["suites"] if r["criterion"] == number)
    note = ""
    if result.get("failing_edges"):
        bad = [e for e in result["edges"] if e["failures"]]
        note = " (failing: " + ", ".join(f"{e['edge']} {e['failures']}/{e['instances']}" for e in bad) + ")"
    _line(number, result["title"], result["passed"], note)
    assert result["passed"], f"criterion {number} failed{note}"


def test_criterion_1_failures_are_confined(first_run):
    # diagnostic only; criterion 1 itself stays red above
    fuzz = next(r for r in first_run["suites"] if r["criterion"] == 1)
    assert fuzz["failing_edges"] in ([], ["clique-v>clique-e"])


def test_criterion_10_determinism(first_run):
    again = run_all(SEED)
    identical = dumps(first_run) == dumps(again)
    _line(10, "byte-identical reports across two runs", identical)
    assert identical
