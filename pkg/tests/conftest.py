import math

import pytest

from simpson_symplectic import ExactPendulum, PendulumParams, PendulumPotential

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def params():
    return PendulumParams(mass=1.0, omega=2.0 * math.pi, theta0=0.5 * math.pi)


@pytest.fixture
def pendulum(params):
    return PendulumPotential.from_params(params)


@pytest.fixture
def oracle(params):
    return ExactPendulum(params)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
