import pytest

_criteria: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance criterion for the final summary."""
    name = request.node.get_closest_marker("criterion").args[0]
    detail = {"text": ""}
    yield detail
    failed = getattr(request.node, "rep_call", None)
    ok = failed is not None and failed.passed
    _criteria.append((name, ok, detail["text"]))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, text in _criteria:
        line = f"{'PASS' if ok else 'FAIL'}  {name}"
        if text:
            line += f"  [{text}]"
        terminalreporter.write_line(line)
