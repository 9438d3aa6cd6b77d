import sys

import pytest

from sccasimir import SuperconductorParams, big_gap_membrane, small_gap_membrane


@pytest.fixture(scope="session")
def sc_params():
    return SuperconductorParams()


@pytest.fixture(scope="session")
def small_gap():
    return small_gap_membrane()


@pytest.fixture(scope="session")
def big_gap():
    return big_gap_membrane()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion, shown after the run."""
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number, description, passed, detail in sorted(results):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(
            f"[{status}] criterion {number:2d}: {description} -- {detail}")
