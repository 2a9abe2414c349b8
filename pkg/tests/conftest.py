import shutil
from pathlib import Path

import numpy as np
import pytest

from ardlbounds.config import default_config_path, load_config

DATA = default_config_path().parent


@pytest.fixture
def rng():
    return np.random.default_rng(20200314)


@pytest.fixture(scope="session")
def cfg():
    return load_config()


@pytest.fixture
def data_copy(tmp_path) -> Path:
    """Writable copy of the bundled data directory, config included."""
    dst = tmp_path / "data"
    shutil.copytree(DATA, dst, ignore=shutil.ignore_patterns("*.json"))
    return dst


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
