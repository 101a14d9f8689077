import random

import pytest

from bnses import load
from helpers import FIXTURES


@pytest.fixture
def rng():
    return random.Random(20160901)


@pytest.fixture(scope="session")
def notebooks():
    return load(FIXTURES / "notebooks.json")


@pytest.fixture(scope="session")
def pricing():
    return load(FIXTURES / "pricing_h.json").set, load(FIXTURES / "pricing_g.json").set


@pytest.fixture(scope="session")
def merge_operands():
    return load(FIXTURES / "merge_h.json").set, load(FIXTURES / "merge_g.json").set


_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n, title = mark.args
    if report.failed or (report.when == "call" and n not in _criteria):
        _criteria[n] = (title, "FAIL" if report.failed else "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, status = _criteria[n]
        terminalreporter.write_line(f"[{status}] criterion {n:2d}: {title}")
