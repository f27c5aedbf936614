import re

import numpy as np
import pytest

_ACCEPTANCE = {}


@pytest.fixture
def rng():
    return np.random.default_rng(20191031)


@pytest.fixture
def four_points():
    return np.array([[0.0], [1.0], [3.0], [7.0]])


@pytest.fixture
def four_csv(tmp_path):
    path = tmp_path / "four.csv"
    path.write_text("0\n1\n3\n7\n")
    return path


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2))
    if report.when == "call" or report.outcome != "passed":
        if report.outcome == "failed" or key not in _ACCEPTANCE:
            _ACCEPTANCE[key] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for (num, name), outcome in sorted(_ACCEPTANCE.items()):
        verdict = {"passed": "PASS", "failed": "FAIL"}.get(outcome, outcome.upper())
        terminalreporter.write_line(f"criterion {num} {name.replace('_', ' ')}: {verdict}")
