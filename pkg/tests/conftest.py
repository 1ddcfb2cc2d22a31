import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ncfsens import BooleanFunction  # noqa: E402


@pytest.fixture
def and_poly():
    """The function whose expansion is 1/2 + x1/2 + x2/2 - x1x2/2 (+1 unless both inputs are -1)."""
    return BooleanFunction.from_values([-1, 1, 1, 1])


@pytest.fixture
def xor2():
    return BooleanFunction.from_values([1, -1, -1, 1])


_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    num, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _ACCEPTANCE[num] = (title, rep.passed, rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        title, ok, dur = _ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {title}  ({dur:.1f}s)")
