import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from tropeig.core import TropMatrix
from tropeig.skewrank import SkewMatrix

EQ12 = TropMatrix([[0, 0, -1], [0, 0, -1], [-1, -1, 0]])
SKEW3 = TropMatrix([[0, 6, -3], [-6, 0, 3], [3, -3, 0]])
# a12 = 6, a23 = 3, a31 = 0, everything else -10
CYCLE3 = TropMatrix([[-10, 6, -10], [-10, -10, 3], [0, -10, -10]])
BASE_KITE3 = TropMatrix([[0, 1, -1], [-1, 0, 1], [1, -1, 0]])

rationals = st.builds(
    Fraction, st.integers(min_value=-20, max_value=20), st.integers(min_value=1, max_value=5)
)


@st.composite
def matrices(draw, min_n=1, max_n=4):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return TropMatrix([[draw(rationals) for _ in range(n)] for _ in range(n)])


@st.composite
def skew_matrices(draw, min_n=2, max_n=5):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    upper = {(i, j): draw(rationals) for i in range(n) for j in range(i + 1, n)}
    return SkewMatrix.from_upper(n, upper)


def random_rational(rng):
    return Fraction(rng.randint(-20, 20), rng.randint(1, 5))


def random_matrix(rng, n):
    return TropMatrix([[random_rational(rng) for _ in range(n)] for _ in range(n)])


def random_skew(rng, n):
    return SkewMatrix.from_upper(
        n, {(i, j): random_rational(rng) for i in range(n) for j in range(i + 1, n)}
    )


@pytest.fixture
def rng():
    return random.Random(20260101)


_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
