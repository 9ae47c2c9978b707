import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from simpson_symplectic import (
    HarmonicPotential,
    PendulumParams,
    PendulumPotential,
    PhaseState,
    ZeroPotential,
    hamiltonian,
    potential_grad,
    potential_hess,
    potential_value,
)

W = 2 * math.pi
POT = PendulumPotential(mass=1.0, omega=W)

angles = st.floats(min_value=-20.0, max_value=20.0, allow_nan=False)
potentials = st.sampled_from(
    [POT, PendulumPotential(mass=2.5, omega=0.7), HarmonicPotential(mass=1.0, stiffness=3.0), ZeroPotential()]
)


@pytest.mark.parametrize(
    "q, expected",
    [(0.0, 0.0), (math.pi, 8 * math.pi**2), (0.5 * math.pi, 4 * math.pi**2)],
)
def test_potential_value(q, expected):
    assert potential_value(POT, q) == pytest.approx(expected, rel=1e-15, abs=1e-15)


@pytest.mark.parametrize("q, expected", [(0.0, 0.0), (0.5 * math.pi, 4 * math.pi**2), (math.pi, 0.0)])
def test_potential_grad(q, expected):
    assert potential_grad(POT, q) == pytest.approx(expected, abs=1e-13)


@pytest.mark.parametrize("q, expected", [(0.0, 4 * math.pi**2), (0.5 * math.pi, 0.0), (math.pi, -4 * math.pi**2)])
def test_potential_hess(q, expected):
    assert potential_hess(POT, q) == pytest.approx(expected, abs=1e-13)


@pytest.mark.parametrize(
    "pot, p, q, expected",
    [
        (POT, 0.0, 0.0, 0.0),
        (POT, 0.0, 0.5 * math.pi, 4 * math.pi**2),
        (PendulumPotential(mass=2.0, omega=1.0), 2.0, 0.0, 1.0),
    ],
)
def test_hamiltonian(pot, p, q, expected):
    assert hamiltonian(pot, PhaseState(t=0.0, q=q, p=p)) == pytest.approx(expected, rel=1e-14, abs=1e-15)


@given(pot=potentials, q=angles)
def test_grad_matches_value(pot, q):
    eps = 1e-5
    fd = (pot.value(q + eps) - pot.value(q - eps)) / (2 * eps)
    assert abs(pot.grad(q) - fd) <= 1e-6 * (1 + abs(pot.grad(q))) * max(1.0, pot.force_scale)


@given(pot=potentials, q=angles)
def test_hess_matches_grad(pot, q):
    eps = 1e-5
    fd = (pot.grad(q + eps) - pot.grad(q - eps)) / (2 * eps)
    assert abs(pot.hess(q) - fd) <= 1e-6 * (1 + abs(pot.hess(q))) * max(1.0, pot.force_scale)


@given(q=angles, p=st.floats(-50, 50))
def test_pendulum_energy_periodic_in_q(q, p):
    h1 = hamiltonian(POT, PhaseState(t=0.0, q=q, p=p))
    h2 = hamiltonian(POT, PhaseState(t=0.0, q=q + 2 * math.pi, p=p))
    assert h2 == pytest.approx(h1, rel=1e-12, abs=1e-12)


@given(q=angles)
def test_pendulum_potential_nonnegative(q):
    assert POT.value(q) >= 0.0


@pytest.mark.parametrize(
    "kwargs",
    [dict(mass=0.0), dict(mass=-1.0), dict(omega=0.0), dict(theta0=0.0), dict(theta0=math.pi), dict(theta0=4.0),
     dict(mass=math.nan)],
)
def test_params_validation(kwargs):
    with pytest.raises(ValueError):
        PendulumParams(**kwargs)


def test_phase_state_rejects_non_finite():
    with pytest.raises(ValueError):
        PhaseState(t=0.0, q=math.inf, p=0.0)


def test_types_are_immutable(params):
    with pytest.raises(AttributeError):
        params.mass = 3.0
