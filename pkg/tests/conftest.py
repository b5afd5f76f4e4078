import pytest
from hypothesis import settings

from qupit_clifford.clifford import CliffordCode

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_codes = {}


def get_code(p):
    if p not in _codes:
        _codes[p] = CliffordCode(p)
    return _codes[p]


@pytest.fixture(scope="session")
def code3():
    return get_code(3)


@pytest.fixture(scope="session")
def code5():
    return get_code(5)


@pytest.fixture(scope="session")
def code7():
    return get_code(7)


ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture
def criterion():
    """Record one acceptance line: criterion(number, name, passed, detail)."""
    def record(number, name, passed, detail=""):
        ACCEPTANCE[number] = (name, bool(passed), detail)
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        name, passed, detail = ACCEPTANCE[number]
        mark = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{mark}  {number:2d}. {name}  {detail}")
