"""The thirteen acceptance criteria at their stated tolerances and time limits.

Run with ``pytest tests/test_acceptance.py`` (one PASS/FAIL line per criterion
is printed in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""
import sys

import pytest

from supersat.config import RunConfig
from supersat.verify import CRITERIA

SLOW = {2, 6, 10, 13}
RESULTS = {}


def _param(check):
    marks = [pytest.mark.slow] if check.number in SLOW else []
    return pytest.param(check, id=f"criterion-{check.number:02d}", marks=marks)


@pytest.mark.parametrize("check", [_param(c) for c in CRITERIA])
def test_criterion(check):
    res = check(RunConfig())
    RESULTS[res.number] = res
    print(res.line())
    for note in res.notes:
        print("    " + note)
    assert res.passed, res.line() + "\n" + "\n".join(res.notes)


def test_all_thirteen_present():
    assert sorted(c.number for c in CRITERIA) == list(range(1, 14))


if __name__ == "__main__":
    ok = True
    for check in CRITERIA:
        res = check(RunConfig())
        print(res.line(), flush=True)
        for note in res.notes:
            print("    " + note)
        ok &= res.passed
    sys.exit(0 if ok else 1)
