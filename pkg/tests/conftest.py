import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from aux3ecc.graph import from_edge_list  # noqa: E402

K4 = [(i, j) for i in range(4) for j in range(i + 1, 4)]


def two_k4(extra):
    return from_edge_list(8, K4 + [(a + 4, b + 4) for a, b in K4] + extra)


GOLDEN_GRAPHS = {
    "C4": lambda: from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    "K4": lambda: from_edge_list(4, K4),
    "digon3": lambda: from_edge_list(2, [(0, 1)] * 3),
    "two_k4_bundle": lambda: two_k4([(0, 4), (1, 5)]),
    "two_k4_bridge": lambda: two_k4([(0, 4)]),
}


@pytest.fixture
def k4():
    return from_edge_list(4, K4)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
