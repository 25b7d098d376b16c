"""Shared test plumbing.

Holds the acceptance-criterion report registry so the one-line verdicts
survive output capture: the terminal summary hook replays them after the
run regardless of -s.
"""

CRITERION_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if not CRITERION_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in CRITERION_LINES:
        terminalreporter.write_line(line)
