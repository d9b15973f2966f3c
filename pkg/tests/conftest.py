import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA = []


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion; the summary prints one line per criterion."""
    entry = {"name": request.node.name, "detail": "", "outcome": None}
    _CRITERIA.append(entry)

    def note(detail):
        entry["detail"] = detail

    yield note


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if "criterion" not in item.fixturenames:
        return
    for entry in _CRITERIA:
        if entry["name"] == item.name:
            if rep.when == "call" or (rep.when == "setup" and rep.skipped):
                entry["outcome"] = "SKIP" if rep.skipped else ("PASS" if rep.passed else "FAIL")
                if rep.skipped and not entry["detail"]:
                    entry["detail"] = str(rep.longrepr[-1]) if isinstance(rep.longrepr, tuple) else ""


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for entry in _CRITERIA:
        terminalreporter.write_line(
            f"{entry['outcome'] or 'FAIL':4s}  {entry['name']}  {entry['detail']}"
        )
