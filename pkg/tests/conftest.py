import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

ROOT = Path(__file__).resolve().parents[1]


@pytest.fixture(scope="session")
def catalog():
    from branetft.lab import default_catalog
    return default_catalog()


@pytest.fixture(scope="session")
def catalog_dir():
    return ROOT / "catalog"


@pytest.fixture(scope="session")
def sectors_dir():
    return ROOT / "sectors"


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None) if mod else None
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
