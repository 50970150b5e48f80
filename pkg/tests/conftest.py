"""Collects acceptance-criterion outcomes and prints one line per criterion."""
import pytest

_OUTCOMES: dict[int, dict] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    num, title = mark.args
    entry = _OUTCOMES.setdefault(num, {"title": title, "passed": True, "ran": False, "detail": ""})
    if rep.when == "call":
        entry["ran"] = True
        entry["detail"] = getattr(item, "criterion_detail", "")
    if rep.failed:
        entry["passed"] = False


@pytest.fixture
def record(request):
    """record("text") attaches a one-line summary to the current criterion."""
    def _record(text):
        request.node.criterion_detail = text
        print(text)
    return _record


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_OUTCOMES):
        e = _OUTCOMES[num]
        status = "PASS" if e["passed"] and e["ran"] else ("FAIL" if e["ran"] else "NOT RUN")
        line = f"criterion {num:2d} {status:4s}  {e['title']}"
        if e["detail"]:
            line += f"  [{e['detail']}]"
        terminalreporter.write_line(line)
