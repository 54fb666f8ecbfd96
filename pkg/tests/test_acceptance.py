"""One test per acceptance criterion; each runs the corresponding reproduction check.

Every criterion is exact (tolerance zero): the checks compare rational
dimensions, spans and values, never floats.  A PASS/FAIL line per criterion
is printed and repeated in the terminal summary.
"""
import pytest

from quatholonomy.verification import CHECKS, _Context, run_check

GRID_SIZE = 2


@pytest.fixture(scope="module")
def ctx():
    return _Context(GRID_SIZE)


@pytest.mark.parametrize("check_id", [cid for cid, _, _ in CHECKS])
def test_acceptance(check_id, ctx, acceptance_log):
    record = run_check(check_id, GRID_SIZE, ctx)
    line = f"{check_id:<22} {record.status.upper():<4}  expected={record.expected}  computed={record.computed}"
    if len(line) > 200:
        line = line[:197] + "..."
    print(line)
    acceptance_log.append(f"{check_id:<22} {record.status.upper()}")
    assert record.status == "pass", f"{check_id}: expected {record.expected}, computed {record.computed}"
