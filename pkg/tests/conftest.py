"""Shared fixtures: src on the path, isolated settings, the --runslow switch."""
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from settings import Settings  # noqa: E402


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run the exhaustive scans")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(autouse=True)
def settings_dir(tmp_path, monkeypatch):
    """Every test gets its own settings.ini."""
    monkeypatch.delenv("HFREE_CORPUS_DIR", raising=False)
    Settings.use_directory(tmp_path / "config")
    yield tmp_path / "config"


@pytest.fixture
def corpus_dir() -> Path:
    return ROOT / "corpus"


@pytest.fixture
def golden_dir() -> Path:
    return ROOT / "tests" / "golden"
