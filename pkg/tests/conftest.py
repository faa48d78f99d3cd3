import pytest

from agbounds import make_suzuki_curve

# one line per acceptance criterion, printed after the test run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
from agbounds.reports import BoundSet
from agbounds.tables import TABLE_KINDS


@pytest.fixture(scope="session")
def suzuki2():
    return make_suzuki_curve(2)


@pytest.fixture(scope="session")
def suzuki4():
    return make_suzuki_curve(4)


@pytest.fixture(scope="session")
def bounds4(suzuki4):
    """All five distance tables on the q0=4 curve; built once (~1 min)."""
    return BoundSet(suzuki4, TABLE_KINDS)


@pytest.fixture(scope="session")
def bounds2(suzuki2):
    return BoundSet(suzuki2, TABLE_KINDS)
