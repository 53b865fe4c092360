import sys
import os

# make sibling test modules importable when pytest is run from the repo root
sys.path.insert(0, os.path.dirname(__file__))

acceptance_results = []


def pytest_terminal_summary(terminalreporter):
    if acceptance_results:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_results:
            terminalreporter.write_line(line)
