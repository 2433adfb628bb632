import pytest

from makalg.algebra import algebra_for
from makalg.scalars import validate_parameters

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def params_32():
    return validate_parameters(3, 2, "3/2", [1, -1])


@pytest.fixture
def params_23():
    return validate_parameters(2, 3, 2, [1, 2, 4])


@pytest.fixture
def alg_32(params_32):
    return algebra_for(params_32)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
