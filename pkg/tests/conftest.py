import os

import pytest

os.environ.setdefault("MPLBACKEND", "Agg")

# criterion id -> (title, passed), collected from tests marked @pytest.mark.criterion
ACCEPTANCE: dict[int, tuple[str, bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion checked by this test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when not in ("setup", "call"):
        return
    n, title = mark.args
    if report.when == "setup" and report.passed:
        return
    ok = report.passed and ACCEPTANCE.get(n, (title, True))[1]
    ACCEPTANCE[n] = (title, ok)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[n]
        tr.write_line(f"{'PASS' if ok else 'FAIL'}  C{n:<3} {title}")
