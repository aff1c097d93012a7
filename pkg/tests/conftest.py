import json
import pathlib

import pytest

DATA = pathlib.Path(__file__).parent / "data"

# (criterion, verdict, detail) lines collected by the acceptance suite
ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def golden():
    with open(DATA / "golden_oracle.json", encoding="utf-8") as fh:
        return json.load(fh)


@pytest.fixture
def report():
    """Record one acceptance verdict; the terminal summary prints them all."""

    def record(criterion, ok, detail=""):
        ACCEPTANCE_LINES.append((criterion, bool(ok), detail))
        print(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in sorted(ACCEPTANCE_LINES, key=lambda r: (r[0], r[2])):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {criterion}: {detail}")
