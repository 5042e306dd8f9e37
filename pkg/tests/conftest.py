import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

from cellforge.cells import CosimplicialFunctor, build_tower
from cellforge.finset import fs_witnesses
from cellforge.sset import ss_witnesses

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def fs_tower():
    return build_tower(8, fs_witnesses())


@pytest.fixture(scope="session")
def ss_tower():
    return build_tower(3, ss_witnesses(4))


@pytest.fixture(scope="session")
def fs_cf(fs_tower):
    return CosimplicialFunctor(fs_tower)


@pytest.fixture(scope="session")
def ss_cf(ss_tower):
    return CosimplicialFunctor(ss_tower)



# --- acceptance summary ----------------------------------------------------------------

_ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None and rep.when == "call":
        _ACCEPTANCE.append((mark.args[0], mark.args[1], rep.passed, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for num, title, ok, secs in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"criterion {num:2d}  {'PASS' if ok else 'FAIL'}  {secs:7.2f}s  {title}")
