"""Shared test fixtures and the acceptance summary hook."""

import pytest


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "acceptance_lines", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def acceptance_lines(request):
    """Accumulates one summary line per acceptance criterion; printed in
    the terminal summary block after the test run."""
    request.config.acceptance_lines = lines = []
    return lines
