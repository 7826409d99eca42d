import pytest
from hypothesis import settings

from griesskit import workbench as wb
from griesskit.dihedral import make

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def catalog():
    return {name: make(name) for name in ("1A", "2A", "2B", "3A", "6A")}


@pytest.fixture(scope="session")
def xn():
    # shares the workbench cache so the acceptance run does not rebuild
    return wb._xn


@pytest.fixture(scope="session")
def abxy3a():
    return wb._abxy3A()


@pytest.fixture(scope="session")
def abxy2a():
    return wb._abxy2A()


@pytest.fixture(scope="session")
def lattice():
    return wb._lattice


ACCEPTANCE_LINES = {}


@pytest.fixture
def acceptance_line():
    def record(k, line):
        ACCEPTANCE_LINES[k] = line
        print("\n" + line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
