import pytest

_ACCEPTANCE = {}


@pytest.fixture
def record_criterion(request):
    """Register one acceptance line; marked FAIL unless the test body finishes."""
    key = request.node.name
    _ACCEPTANCE[key] = ["FAIL", ""]

    def record(detail):
        _ACCEPTANCE[key][1] = detail

    yield record
    if not hasattr(request.node, "rep_call") or request.node.rep_call.passed:
        _ACCEPTANCE[key][0] = "PASS"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, (status, detail) in sorted(_ACCEPTANCE.items()):
        terminalreporter.write_line(f"{status:4} {name}  {detail}")
