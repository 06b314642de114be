"""Acceptance criteria; each records one PASS/FAIL line for the terminal summary."""

import pytest

from acceptance_checks import CRITERIA

RESULTS: list[str] = []


def _record(number: int):
    title, fn = CRITERIA[number]
    passed, detail = fn()
    RESULTS.append(f"criterion {number:>2} {'PASS' if passed else 'FAIL'}: {title} | {detail}")
    return passed, detail


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    passed, detail = _record(number)
    assert passed, detail


if __name__ == "__main__":
    for n in sorted(CRITERIA):
        _record(n)
    print("\n".join(RESULTS))
