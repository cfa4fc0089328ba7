from __future__ import annotations

from pathlib import Path

import pytest

from vdarg import load_agent

SCENARIOS = Path(__file__).resolve().parent.parent / "scenarios"

_ACCEPTANCE_RESULTS: list[tuple[int, str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is not None and report.when == "call":
        status = "PASS" if report.passed else "FAIL"
        _ACCEPTANCE_RESULTS.append((marker.args[0], marker.args[1], status))


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_RESULTS:
        terminalreporter.write_line("")
        for number, description, status in sorted(_ACCEPTANCE_RESULTS):
            terminalreporter.write_line(f"ACCEPTANCE {number} ({description}): {status}")


@pytest.fixture(scope="session")
def eldercare_path() -> Path:
    return SCENARIOS / "eldercare.json"


@pytest.fixture(scope="session")
def nixon_path() -> Path:
    return SCENARIOS / "nixon.json"


@pytest.fixture(scope="session")
def standoff_path() -> Path:
    return SCENARIOS / "standoff.json"


@pytest.fixture(scope="session")
def eldercare(eldercare_path):
    return load_agent(eldercare_path)


@pytest.fixture(scope="session")
def nixon(nixon_path):
    return load_agent(nixon_path)
