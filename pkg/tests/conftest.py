import pytest

from argshift.chevalley import build_lie_algebra

_acceptance = {}


@pytest.fixture(scope="session")
def a1():
    return build_lie_algebra("A1")


@pytest.fixture(scope="session")
def a2():
    return build_lie_algebra("A2")


@pytest.fixture(scope="session")
def b2():
    return build_lie_algebra("B2")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for name, value in report.user_properties:
        if name == "acceptance":
            key, title = value
            ok = report.passed and _acceptance.get(key, (True, title))[0]
            _acceptance[key] = (ok, title)


def pytest_runtest_setup(item):
    marker = item.get_closest_marker("acceptance")
    if marker:
        item.user_properties.append(("acceptance", (marker.args[0], marker.args[1])))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_acceptance):
        ok, title = _acceptance[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] AC{key:<2} {title}")
