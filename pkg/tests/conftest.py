import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

from neutromaps.documents import load_document  # noqa: E402

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for n, title in _marks.get(report.nodeid, ()):
        _CRITERIA[n] = ("PASS" if report.passed else "FAIL", title)


_marks = {}


def pytest_collection_modifyitems(items):
    for item in items:
        for mark in item.iter_markers("criterion"):
            title = (item.function.__doc__ or item.name).strip().splitlines()[0]
            _marks.setdefault(item.nodeid, []).append((mark.args[0], title))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        status, title = _CRITERIA[n]
        terminalreporter.write_line(f"[criterion {n:2d}] {status}  {title}")


@pytest.fixture
def fixture_matrix():
    def load(name):
        return load_document(name).matrix
    return load
