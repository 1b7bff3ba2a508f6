"""Shared pytest wiring: collect acceptance-criterion verdicts.

The acceptance tests each record a one-line PASS/FAIL verdict through the
`criterion_report` fixture; the hook below repeats the collected lines in a
dedicated section at the end of the run, so the verdicts are visible without
rerunning with -s.
"""

import pytest

_CRITERION_LINES: list[str] = []


@pytest.fixture
def criterion_report():
    def record(line: str) -> None:
        print(line)
        _CRITERION_LINES.append(line)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERION_LINES:
            terminalreporter.line(line)
