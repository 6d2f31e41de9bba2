"""Acceptance gate: one pass/fail line per criterion.

Run with ``pytest tests/test_acceptance.py`` or ``python tests/test_acceptance.py``.
"""

import pytest

from fusionkl.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("number", [num for num, _, _ in CRITERIA], ids=[f"criterion_{num}" for num, _, _ in CRITERIA])
def test_criterion(number, capsys):
    result = run_criterion(number)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail


if __name__ == "__main__":
    import sys

    failed = 0
    for num, _, _ in CRITERIA:
        result = run_criterion(num)
        print(result.line())
        failed += not result.passed
    sys.exit(1 if failed else 0)
