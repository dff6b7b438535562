import re

import pytest

from twobridge.enumerator import tabulate_range
from twobridge.identify import load_reference_fixture, shipped_table


@pytest.fixture(scope="session")
def rows11():
    return tabulate_range(11)


@pytest.fixture(scope="session")
def fixture():
    return load_reference_fixture()


@pytest.fixture(scope="session")
def table():
    return shipped_table()


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", getattr(rep, "nodeid", ""))
            if m and rep.when == "call":
                lines.append((int(m.group(1)), m.group(2), "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for num, name, verdict in sorted(lines):
            terminalreporter.write_line(f"criterion {num} [{name}]: {verdict}")
