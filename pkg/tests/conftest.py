# File: tests/conftest.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

import os
import tempfile
from pathlib import Path

# src.logging opens its file handler on import
os.environ.setdefault("LOG_FILE", str(Path(tempfile.gettempdir()) / "spansim-tests.log"))

import pytest  # noqa: E402

from src.graph import build_graph, generate  # noqa: E402


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow acceptance tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def single_edge():
    return build_graph(2, [(0, 1)])


@pytest.fixture
def triangle():
    return build_graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def cycle8():
    return generate("cycle", 8)[0]


@pytest.fixture
def k16():
    return generate("complete", 16)[0]


@pytest.fixture
def star6():
    return generate("star", 6)[0]


@pytest.fixture
def small_gnp():
    return generate("gnp", 40, p=0.2, seed=5)[0]
