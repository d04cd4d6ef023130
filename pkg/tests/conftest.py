import time

import pytest

ACCEPTANCE: dict[str, tuple[str, str]] = {}


@pytest.fixture
def criterion(request):
    """Time a test and record one pass/fail line for the acceptance summary."""
    name = request.node.name
    start = time.perf_counter()
    info = {"detail": ""}
    yield info
    elapsed = time.perf_counter() - start
    limit = info.get("limit")
    if limit is not None:
        assert elapsed < limit, f"{name} took {elapsed:.1f}s (limit {limit}s)"
    ACCEPTANCE.setdefault(name, (f"{elapsed:.2f}s", info["detail"]))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if "criterion" in item.fixturenames and report.failed:
        ACCEPTANCE[item.name] = ("FAIL", str(report.longrepr).splitlines()[-1] if report.longrepr else "")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE):
        status, detail = ACCEPTANCE[name]
        verdict = "FAIL" if status == "FAIL" else "PASS"
        timing = "" if status == "FAIL" else f" [{status}]"
        terminalreporter.write_line(f"{verdict} {name}{timing} {detail}".rstrip())
