"""Variational symplectic integrators (Newmark and Simpson quadrature) for
one-degree-of-freedom Lagrangian systems, with an exact nonlinear pendulum
oracle."""
from .elliptic import (
    EllipticDomainError,
    ExactPendulum,
    agm,
    complete_K,
    exact_pendulum_period,
    exact_pendulum_state,
    incomplete_F,
    jacobi_am,
)
from .integrators import (
    NewtonConfig,
    NewtonDivergence,
    Scheme,
    SchemeConfig,
    SimpsonStepResult,
    SingularJacobian,
    StepperError,
    Trajectory,
    newmark_step,
    run_trajectory,
    simpson_step,
)
from .model import (
    HarmonicPotential,
    PendulumParams,
    PendulumPotential,
    PhaseState,
    Potential,
    ZeroPotential,
    hamiltonian,
    potential_grad,
    potential_hess,
    potential_value,
)

__version__ = "0.1.0"
