"""Shared pytest plumbing.

Tests marked ``@pytest.mark.acceptance(num, description)`` are acceptance
criteria; after the run a summary section prints one PASS/FAIL line per
criterion that was executed.
"""

import pytest

_RESULTS: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "acceptance(num, description): marks a test as one numbered acceptance criterion")


@pytest.hookimpl(tryfirst=True, hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    num, desc = marker.args
    if rep.when == "setup" and not rep.passed:
        _RESULTS[num] = ("FAIL", desc)
    elif rep.when == "call":
        _RESULTS[num] = ("PASS" if rep.passed else "FAIL", desc)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_RESULTS):
        status, desc = _RESULTS[num]
        terminalreporter.write_line(f"ACCEPTANCE {num}: {status} - {desc}")
