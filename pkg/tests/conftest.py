import pytest

# criterion number -> (ok, detail), filled in by test_acceptance.py
ACCEPTANCE = {}


def record(n: int, ok: bool, detail: str = ""):
    ACCEPTANCE[n] = (ok, detail)
    return ok


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture(scope="session")
def report():
    from manetti.classify import full_classification
    return full_classification(6)


_PROPERTIES = {"passed": 0, "failed": 0}


def pytest_runtest_logreport(report):
    if "test_properties.py" in report.nodeid and report.when == "call":
        _PROPERTIES["passed" if report.passed else "failed"] += 1


def pytest_sessionfinish(session):
    ran = _PROPERTIES["passed"] + _PROPERTIES["failed"]
    if ran and ACCEPTANCE:
        record(12, _PROPERTIES["failed"] == 0,
               f"{_PROPERTIES['passed']}/{ran} property tests passed")
