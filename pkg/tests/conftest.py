import os
import sys

import pytest

from qdivpow import AlgebraKind, ScalarField

sys.path.insert(0, os.path.dirname(__file__))

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def generic():
    return ScalarField.generic()


@pytest.fixture(scope="session")
def root3():
    return ScalarField.root_of_unity(3)


@pytest.fixture(scope="session")
def root5():
    return ScalarField.root_of_unity(5)


@pytest.fixture(scope="session")
def root6():
    return ScalarField.root_of_unity(6)


@pytest.fixture(params=["generic", "root:3", "root:5", "root:6"])
def field(request):
    if request.param == "generic":
        return ScalarField.generic()
    return ScalarField.root_of_unity(int(request.param[5:]))


@pytest.fixture
def divided():
    return AlgebraKind.divided()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
