from pathlib import Path

import pytest

from gitfan import GradedPresentation, enumerate_orbit_cones, load_presentation, parse_polynomial

ROOT = Path(__file__).resolve().parent.parent
DEMOS = ROOT / "demos"
GOLDEN = Path(__file__).resolve().parent / "golden"

EXAMPLE_WEIGHTS = ((4, 1), (2, 1), (1, 2), (1, 3))
DET_WEIGHTS = ((1, 0), (1, 1), (0, 1), (0, 2))

_acceptance_results = []


@pytest.fixture(scope="session")
def example():
    return load_presentation(DEMOS / "paper-example.input")


@pytest.fixture(scope="session")
def example_oc(example):
    return enumerate_orbit_cones(example)


@pytest.fixture(scope="session")
def det():
    labels = ("T1", "T2", "T3", "T4")
    q = parse_polynomial("T1*T4 - T2*T3", labels)
    return GradedPresentation(DET_WEIGHTS, (q,), labels)


@pytest.fixture(scope="session")
def det_oc(det):
    return enumerate_orbit_cones(det)


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): exit criterion, reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance_results.append((marker.args[0], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in _acceptance_results:
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {label}")
