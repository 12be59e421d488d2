import contextlib

import pytest

ACCEPTANCE = {}
DIAGNOSTICS = []


@pytest.fixture
def criterion():
    """Record one acceptance line: ``with criterion(3, "text"): ...``."""
    @contextlib.contextmanager
    def record(number, text):
        try:
            yield
        except BaseException:
            ACCEPTANCE[number] = ("FAIL", text)
            raise
        ACCEPTANCE[number] = ("PASS", text)
    return record


@pytest.fixture
def diagnostic():
    return DIAGNOSTICS.append


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            status, text = ACCEPTANCE[number]
            terminalreporter.write_line(f"[{status}] {number}. {text}")
    if DIAGNOSTICS:
        terminalreporter.section("diagnostics")
        for line in DIAGNOSTICS:
            terminalreporter.write_line(line)
