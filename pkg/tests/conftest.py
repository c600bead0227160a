from __future__ import annotations

import pytest

_ACCEPTANCE: list[tuple[str, str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.module.__name__ != "test_acceptance":
        return
    failed = report.failed
    if report.when == "call" or (failed and report.when == "setup"):
        num = item.name.split("_")[2] if item.name.startswith("test_criterion_") else item.name
        label = f"criterion {int(num)}" if num.isdigit() else num
        doc = (item.function.__doc__ or "").strip().splitlines()[0] if item.function.__doc__ else ""
        _ACCEPTANCE.append(("FAIL" if failed else "PASS", label, doc))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for status, label, doc in _ACCEPTANCE:
        terminalreporter.write_line(f"{status} {label}: {doc}")
