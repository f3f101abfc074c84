import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from signedalg.dyadic_core import BitMatrix, BitVec  # noqa: E402
from signedalg.signed_group import GroupElement  # noqa: E402

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def bitvecs(draw, n=None, max_len=16):
    n = draw(st.integers(0, max_len)) if n is None else n
    return BitVec(n, draw(st.integers(0, (1 << n) - 1)) if n else 0)


@st.composite
def bitmatrices(draw, rows=None, cols=None, max_dim=8):
    rows = draw(st.integers(1, max_dim)) if rows is None else rows
    cols = draw(st.integers(1, max_dim)) if cols is None else cols
    data = tuple(draw(st.integers(0, (1 << cols) - 1)) for _ in range(rows))
    return BitMatrix(rows, cols, data)


@st.composite
def elements(draw, n):
    top = (1 << n) - 1
    return GroupElement.from_ints(n, draw(st.integers(0, top)), draw(st.integers(0, top)),
                                  draw(st.sampled_from([1, -1])))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


# one "criterion N: PASS|FAIL ..." line per acceptance check, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
