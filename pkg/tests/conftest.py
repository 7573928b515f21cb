import pytest

_acceptance_lines = []


@pytest.fixture
def report():
    """Collects one PASS/FAIL line per acceptance criterion for the terminal summary."""
    return _acceptance_lines.append


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
