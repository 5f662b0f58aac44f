from __future__ import annotations

import pytest

from artinglue.catalog import DEFAULT_CATALOG, chain
from artinglue.lattice import FiniteFrame

CRITERIA: list[tuple[str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion checked by this test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    n, text = marker.args
    line = f"criterion {n}: {'PASS' if report.passed else 'FAIL'}  {text}"
    CRITERIA.append((str(n), line))


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(CRITERIA, key=lambda t: int(t[0])):
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def catalog():
    return DEFAULT_CATALOG


@pytest.fixture(scope="session")
def C2() -> FiniteFrame:
    return chain(2)


@pytest.fixture(scope="session")
def C3() -> FiniteFrame:
    return chain(3)


@pytest.fixture(scope="session")
def B2(catalog) -> FiniteFrame:
    return catalog["B2"]
