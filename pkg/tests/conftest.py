"""Shared fixtures and the end-of-run acceptance scoreboard."""

import numpy as np
import pytest

# one line per acceptance criterion, filled in by tests/test_acceptance.py
ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    """Fresh deterministic generator for a single test."""
    return np.random.default_rng(20260819)


@pytest.fixture(scope="session")
def scoreboard():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
