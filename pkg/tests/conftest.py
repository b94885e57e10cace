import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_results: dict[int, list[tuple[str, str]]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    criterion = report.user_properties and dict(report.user_properties).get("criterion")
    if criterion:
        _results.setdefault(criterion, []).append((report.nodeid, report.outcome))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker and ("criterion", marker.args[0]) not in item.user_properties:
        item.user_properties.append(("criterion", marker.args[0]))
    yield


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(_results):
        outcomes = _results[criterion]
        ok = all(o == "passed" for _, o in outcomes)
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(
            f"criterion {criterion:>2}: {status} ({len(outcomes)} check{'s' * (len(outcomes) != 1)})")
