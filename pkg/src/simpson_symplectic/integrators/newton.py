"""Newton iteration settings and failure modes shared by both steppers."""
from __future__ import annotations

from dataclasses import dataclass

from ..model import PhaseState, Potential


class StepperError(RuntimeError):
    """A one-step map could not be evaluated.

    ``step_index`` is filled in by :func:`run_trajectory` when the failure
    happens inside a multi-step run.
    """

    def __init__(self, message, *, iters=None, residual=None, step_index=None):
        super().__init__(message)
        self.iters = iters
        self.residual = residual
        self.step_index = step_index

    def __str__(self):
        msg = super().__str__()
        if self.step_index is not None:
            msg = f"step {self.step_index}: {msg}"
        return msg


class NewtonDivergence(StepperError):
    """Residual not below tolerance within the iteration budget, or non-finite."""


class SingularJacobian(StepperError):
    """The Newton matrix is (numerically) singular at the current iterate."""


@dataclass(frozen=True)
class NewtonConfig:
    """Stopping rule for the per-step Newton solve.

    Convergence is declared when the max-norm of the residual is at most
    ``residual_tol * max(1, |p_j|, force_scale)``.

    ``simpson_inverse`` selects the Simpson update: ``"exact"`` solves the
    3x3 system, ``"printed"`` multiplies by the adjugate without the
    ``1 / det`` factor (a quasi-Newton variant kept for comparison).
    """

    residual_tol: float = 1e-13
    max_iters: int = 25
    simpson_inverse: str = "exact"

    def __post_init__(self):
        if not self.residual_tol > 0.0:
            raise ValueError(f"residual_tol must be positive, got {self.residual_tol}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be >= 1, got {self.max_iters}")
        if self.simpson_inverse not in ("exact", "printed"):
            raise ValueError(f"unknown simpson_inverse {self.simpson_inverse!r}")


def residual_scale(pot: Potential, s: PhaseState) -> float:
    return max(1.0, abs(s.p), pot.force_scale)


# |det| below this is treated as a singular Newton matrix
SINGULAR_DET = 1e-10
