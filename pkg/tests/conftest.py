import os
from pathlib import Path

import pytest

from triple_symbols.config import RunConfig
from triple_symbols.eligibility import check_triple

GOLDEN_DIR = Path(__file__).parent / "golden"

# TRIPLE_SYMBOL_REGOLD=1 rewrites the golden files instead of diffing
REGOLD = os.getenv("TRIPLE_SYMBOL_REGOLD", "") == "1"


@pytest.fixture
def run_config():
    return RunConfig()


@pytest.fixture
def table1_ctx():
    """Context factory for the (-17, -593) pair"""
    def make(p3, p1=-17, p2=-593):
        return check_triple(3, p1, p2, p3)
    return make


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full table and batch runs")
