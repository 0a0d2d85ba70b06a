"""The twelve headline acceptance checks, one test each.

Every check re-derives published values with exact arithmetic (tolerance
zero) and prints a single pass/fail line; run with `pytest -s` to see them.
"""

import pytest

from lefschetz import verify

CRITERIA = list(enumerate(verify.ALL_CRITERIA, start=1))


@pytest.mark.parametrize("number,criterion", CRITERIA,
                         ids=[f"criterion_{n:02d}" for n, _ in CRITERIA])
def test_acceptance(number, criterion):
    ok, detail = criterion()
    print(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {number} failed: {detail}"
