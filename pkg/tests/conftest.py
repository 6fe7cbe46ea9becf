import pytest
from hypothesis import strategies as st

from bicyclic.core import Element


def elements(max_a: int = 40, max_top: int = 40):
    """Hypothesis strategy for elements with bounded coordinates."""
    return st.tuples(st.integers(0, max_a), st.integers(0, max_top)).map(lambda p: Element(p[0], p[1] - p[0]))


def shift_oracle(x, y):
    """Product of ``x`` and ``y`` read off the composed partial shifts (right factor first)."""
    def composed(n):
        if n < y[0]:
            return None
        m = n + y[1]
        return None if m < x[0] else m + x[1]

    start = next(n for n in range(0, x[0] + y[0] + abs(y[1]) + 2) if composed(n) is not None)
    return Element(start, composed(start) - start)


@pytest.fixture
def E():
    return Element


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
