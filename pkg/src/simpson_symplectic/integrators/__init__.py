from .newmark import discrete_action_newmark, discrete_lagrangian_newmark, newmark_residual, newmark_step
from .newton import NewtonConfig, NewtonDivergence, SingularJacobian, StepperError
from .quadratic import QuadraticSegment, basis_eval, segment_derivatives, segment_value
from .simpson import (
    SimpsonStepResult,
    discrete_action_simpson,
    discrete_lagrangian_simpson,
    momentum_from_nodes_simpson,
    simpson_jacobian,
    simpson_jacobian_adjugate,
    simpson_residual,
    simpson_step,
    solve_midpoint,
)
from .trajectory import Scheme, SchemeConfig, Trajectory, one_step, run_trajectory
