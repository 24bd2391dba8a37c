"""Shared pytest wiring for the suite.

The acceptance tests record one verdict line per criterion; printing them
from the terminal-summary hook is the only channel that survives pytest's
fd-level capture, so a plain ``pytest -v`` run always shows them.
"""

ACCEPTANCE_VERDICTS = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_VERDICTS:
            terminalreporter.write_line(line)
