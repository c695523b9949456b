import pytest

from bpaprob import make_frame, make_mass
from helpers import EXAMPLE2_ENTRIES


@pytest.fixture
def frame4():
    return make_frame(["w1", "w2", "w3", "w4"])


@pytest.fixture
def example1(frame4):
    return make_mass(frame4, [(frame4.labels, 1.0)])


@pytest.fixture
def example2():
    frame = make_frame(["w1", "w2", "w3"])
    return make_mass(frame, EXAMPLE2_ENTRIES)


@pytest.fixture
def bayes_ab():
    frame = make_frame(["a", "b"])
    return make_mass(frame, {"a": 0.7, "b": 0.3})


# acceptance criteria bookkeeping: one summary line per criterion

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = _criterion_markers.get(report.nodeid)
    if marker is not None:
        _criteria[marker] = report.outcome


_criterion_markers = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _criterion_markers[item.nodeid] = (m.args[0], m.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (number, text), outcome in sorted(_criteria.items()):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {text}")
