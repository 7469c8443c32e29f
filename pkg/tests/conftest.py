from __future__ import annotations

import os

import pytest

ACCEPTANCE_LINES: list[str] = []


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False, help="run the long census checks")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running census check (enable with --slow or OCTMINOR_SLOW=1)")


def slow_enabled(config) -> bool:
    return config.getoption("--slow") or os.environ.get("OCTMINOR_SLOW") == "1"


@pytest.fixture
def slow(request) -> bool:
    return slow_enabled(request.config)


def pytest_collection_modifyitems(config, items):
    if slow_enabled(config):
        return
    skip = pytest.mark.skip(reason="needs --slow or OCTMINOR_SLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def acceptance_log() -> list[str]:
    return ACCEPTANCE_LINES
