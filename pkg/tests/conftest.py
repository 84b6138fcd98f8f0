import random

import pytest
from hypothesis import strategies as st

from twistgab import ExtensionField

F9 = ExtensionField(3, 2)
F81 = ExtensionField(3, 4)
F16 = ExtensionField(2, 4)


def elements(field):
    return st.integers(0, field.order - 1).map(field.from_int)


def first_with_norm(field, value):
    return next(x for x in field.elements() if x and int(x.norm()) == value)


@pytest.fixture
def rng():
    return random.Random(20260101)


@pytest.fixture(scope="session")
def f81():
    return F81


@pytest.fixture(scope="session")
def eta2():
    """Smallest element of F_81 with norm 2."""
    return first_with_norm(F81, 2)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def report():
    def record(criterion: str, passed: bool, detail: str):
        line = f"{'PASS' if passed else 'FAIL'} [{criterion}] {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
