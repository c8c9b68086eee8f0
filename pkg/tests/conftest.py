from __future__ import annotations

import re

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_ac(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    k = int(m.group(1))
    if report.when == "call" or report.failed:
        prev = _CRITERIA.get(k, ("PASS", ""))[0]
        outcome = "FAIL" if report.failed or prev == "FAIL" else "PASS"
        _CRITERIA[k] = (outcome, m.group(2).replace("_", " "))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_CRITERIA):
        outcome, name = _CRITERIA[k]
        terminalreporter.write_line(f"AC{k:<2} {outcome}  {name}")
    passed = sum(1 for o, _ in _CRITERIA.values() if o == "PASS")
    terminalreporter.write_line(f"{passed}/{len(_CRITERIA)} criteria pass")
