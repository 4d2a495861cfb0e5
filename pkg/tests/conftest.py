import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_results = pytest.StashKey[list]()


@pytest.fixture
def rng():
    return random.Random(0)


def pytest_configure(config):
    config.stash[_results] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    # a failing setup counts as a failed criterion too
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        number, title = marker.args
        item.config.stash[_results].append((number, title, rep.passed, rep.duration))


def pytest_terminal_summary(terminalreporter, config):
    results = sorted(config.stash[_results])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, duration in results:
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number:>2}: {title} ({duration:.2f}s)")
