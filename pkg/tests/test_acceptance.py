"""Acceptance criteria, one test each; every run prints a single pass/fail line."""

import pytest

from dblcat.criteria import ALL_CRITERIA, TIME_LIMITS, TITLES


@pytest.mark.parametrize("number", sorted(ALL_CRITERIA))
def test_criterion(number, acceptance_log):
    outcome = ALL_CRITERIA[number](seed=0)
    status = "PASS" if outcome.ok else "FAIL"
    line = (f"[{status}] criterion {number}: {TITLES[number]} "
            f"({outcome.seconds:.2f}s, limit {TIME_LIMITS[number]}s, {len(outcome.checks)} checks)")
    print(line)
    acceptance_log.append(line)
    assert outcome.ok, outcome.witness
