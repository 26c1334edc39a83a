"""Shared fixtures: the worked example, seeded element pools, acceptance log."""

import math

import pytest

from quatu11 import Mat2H, MoebiusClass, Quaternion, random_element, validate

R2 = math.sqrt(2)

CLASS_NAMES = [c.value for c in MoebiusClass]


def worked_example():
    """The compound elliptic element [[2+i, -r2+r2i], [-r2+r2i, -1-2i]]."""
    a = Quaternion(2.0, 1.0, 0.0, 0.0)
    b = Quaternion(-R2, R2, 0.0, 0.0)
    d = Quaternion(-1.0, -2.0, 0.0, 0.0)
    return validate(Mat2H(a, b, b, d))


@pytest.fixture(scope="session")
def example():
    return worked_example()


@pytest.fixture(scope="session")
def class_pool():
    """A few elements of each Moebius class, keyed by class name."""
    return {name: [random_element([31, k], class_hint=name) for k in range(6)]
            for name in CLASS_NAMES}


@pytest.fixture(scope="session")
def generic_pool():
    return [random_element([32, k]) for k in range(60)]


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance():
    """Record one pass/fail line per criterion for the terminal summary."""

    def record(criterion: str, ok: bool, detail: str = "") -> bool:
        tail = f"  ({detail})" if detail else ""
        ACCEPTANCE_LINES.append(
            f"criterion {criterion}: {'PASS' if ok else 'FAIL'}{tail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
