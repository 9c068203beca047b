"""Acceptance bookkeeping: one PASS/FAIL line per numbered criterion."""
import pytest

_RESULTS = {}
_DETAILS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): numbered acceptance criterion")


@pytest.fixture
def detail(request):
    """Attach a short measured summary to the criterion line of this test."""
    marker = request.node.get_closest_marker("criterion")

    def record(text):
        if marker is not None:
            _DETAILS.setdefault(marker.args[0], []).append(text)
    return record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        key = tuple(marker.args)
        _RESULTS[key] = _RESULTS.get(key, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), ok in sorted(_RESULTS.items()):
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}"
        if number in _DETAILS:
            line += "  [" + "; ".join(_DETAILS[number]) + "]"
        terminalreporter.write_line(line)
