import pytest

# (number, title) -> "PASS" | "FAIL", filled from tests marked ``acceptance``
_results = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    report = outcome.get_result()
    if report.when == "call" or report.failed:
        key = tuple(marker.args)
        failed = report.failed or _results.get(key) == "FAIL"
        _results[key] = "FAIL" if failed else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), verdict in sorted(_results.items()):
        terminalreporter.write_line(f"criterion {number}: {verdict}  {title}")
