import pytest

_RESULTS = {}


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion."""
    name = request.node.name

    def record(number, text):
        _RESULTS[name] = (number, text)
        print(f"criterion {number}: {text}")

    yield record
    if name in _RESULTS:
        number, text = _RESULTS[name]
        ok = not getattr(request.node, "rep_call_failed", False)
        _RESULTS[name] = (number, text, ok)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call_failed = rep.failed


def pytest_terminal_summary(terminalreporter):
    rows = [v for v in _RESULTS.values() if len(v) == 3]
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for number, text, ok in sorted(rows):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {text}")
