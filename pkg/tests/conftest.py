from fractions import Fraction

import pytest
from hypothesis import strategies as st

from ramanujan_ogf.series import Polynomial


def small_fractions(bound: int = 9):
    return st.builds(
        Fraction,
        st.integers(-bound, bound),
        st.integers(1, bound),
    )


def small_polys(max_degree: int = 8, bound: int = 9):
    return st.lists(st.integers(-bound, bound), max_size=max_degree + 1).map(Polynomial)


def assert_reduced(x: Fraction) -> None:
    import math

    assert x.denominator > 0
    assert math.gcd(abs(x.numerator), x.denominator) == 1
    if x == 0:
        assert (x.numerator, x.denominator) == (0, 1)


@pytest.fixture
def fixtures_dir():
    from pathlib import Path

    return Path(__file__).parent / "fixtures"


_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Context manager recording one PASS/FAIL line per acceptance criterion."""
    from contextlib import contextmanager

    @contextmanager
    def record(number: int, title: str):
        try:
            yield
        except BaseException:
            _ACCEPTANCE_LINES.append(f"FAIL  criterion {number:2d}: {title}")
            raise
        _ACCEPTANCE_LINES.append(f"PASS  criterion {number:2d}: {title}")

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
