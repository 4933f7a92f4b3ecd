import pytest

from qnc.verify import run_suite

_REPORTS: dict = {}
ACCEPTANCE_LINES: list[str] = []


def suite_report(name: str):
    """Run each suite at most once per session."""
    if name not in _REPORTS:
        _REPORTS[name] = run_suite(name)
    return _REPORTS[name]


@pytest.fixture(scope="session")
def reports():
    return suite_report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
