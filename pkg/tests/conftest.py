import math

import pytest

from zitterlab.dynamics import helix, integrate, reduced_field
from zitterlab.jetcalc import JetPoint
from zitterlab.lagrangians import BoppParams
from zitterlab.minkowski import FourVector
from zitterlab.sampling import random_jets, stack_jets

HELIX_PARAMS = BoppParams(1.0, -4.0)
HELIX_OMEGA = 1 / math.sqrt(2)


def jet(u, udot=(0, 0, 0, 0), uddot=(0, 0, 0, 0), utdot=(0, 0, 0, 0), x=(0, 0, 0, 0), order=3):
    """Jet from plain tuples, for hand-worked examples."""
    return JetPoint(
        FourVector(*map(float, x)),
        FourVector(*map(float, u)),
        FourVector(*map(float, udot)),
        FourVector(*map(float, uddot)),
        FourVector(*map(float, utdot)),
        order=order,
    )


@pytest.fixture(scope="session")
def params():
    return BoppParams(1.0, 1.0)


@pytest.fixture(scope="session")
def jets3():
    return stack_jets(random_jets(42, 1000, order=3))


@pytest.fixture(scope="session")
def jets4():
    return stack_jets(random_jets(7, 200, order=4))


@pytest.fixture(scope="session")
def helix_solution():
    return helix(HELIX_PARAMS, HELIX_OMEGA)


@pytest.fixture(scope="session")
def helix_trajectory(helix_solution):
    return integrate(reduced_field(HELIX_PARAMS), helix_solution.state, 20.0, 1e-3, params=HELIX_PARAMS)


# Acceptance lines collected by tests/test_acceptance.py.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
