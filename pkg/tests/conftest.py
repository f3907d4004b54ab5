import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from scaffolds import catalog  # noqa: E402


@pytest.fixture(scope="session")
def schemes():
    """Every catalog translation scheme, built once."""
    return {name: catalog.scheme(name) for name in catalog.SCHEMES}


@pytest.fixture(scope="session")
def duals(schemes):
    from scaffolds import dual_scheme
    return {name: dual_scheme(ts) for name, ts in schemes.items()}


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE_LINES
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
