from pathlib import Path

import pytest

GOLDEN = Path(__file__).with_name("golden")

# lines recorded by test_acceptance, echoed once at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


def read_golden(name):
    with open(GOLDEN / name) as f:
        return [line.split() for line in f if line.strip()]


@pytest.fixture
def golden():
    return read_golden


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
