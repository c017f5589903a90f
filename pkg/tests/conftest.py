import pytest

_RESULTS: dict[int, tuple[str, str, str]] = {}
_NOTES: list[str] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): numbered acceptance criterion")


@pytest.fixture
def note():
    """Extra lines shown under the acceptance summary."""
    return _NOTES.append


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and not report.passed):
        detail = "" if report.passed else report.longrepr.reprcrash.message if hasattr(report.longrepr, "reprcrash") else str(report.longrepr)
        _RESULTS[number] = ("PASS" if report.passed else "FAIL", title, detail.splitlines()[0] if detail else "")


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_RESULTS):
        status, title, detail = _RESULTS[number]
        line = f"AC{number:<3} {status}  {title}"
        tr.write_line(line + (f"  ({detail})" if detail else ""))
    for line in _NOTES:
        tr.write_line(line)
