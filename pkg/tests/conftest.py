"""Shared pytest hooks.

The acceptance suite records one PASS/FAIL line per criterion while it runs;
this hook replays those lines in the terminal summary so a plain ``pytest -v``
run shows them even with output capture enabled.
"""

import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULT_LINES", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
