"""Shared pytest wiring.

Tests marked ``@pytest.mark.criterion(number, title)`` are collected into a
summary that prints one PASS/FAIL line per acceptance criterion at the end
of the run.
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    entry = _RESULTS.setdefault(number, {"title": title, "ok": True, "seconds": 0.0})
    if report.when == "call":
        entry["seconds"] += report.duration
    if report.failed or (report.when == "call" and report.skipped):
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        entry = _RESULTS[number]
        status = "PASS" if entry["ok"] else "FAIL"
        terminalreporter.write_line(
            f"criterion {number}: {status}  {entry['title']}  ({entry['seconds']:.1f} s)")
