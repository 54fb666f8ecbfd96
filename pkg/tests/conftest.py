from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from quatholonomy.quaternion import Quaternion

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_rationals = st.fractions(min_value=-9, max_value=9, max_denominator=6)
quaternions = st.builds(Quaternion, small_rationals, small_rationals, small_rationals, small_rationals)
imaginary = st.builds(lambda a, b, c: Quaternion(Fraction(0), a, b, c), small_rationals, small_rationals, small_rationals)

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
