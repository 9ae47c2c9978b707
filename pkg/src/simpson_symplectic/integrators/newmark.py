"""Variational Newmark scheme (midpoint quadrature of the action).

The one-step map ``(p_j, q_j) -> (p_{j+1}, q_{j+1})`` solves

    p_{j+1} - p_j + h V'((q_j + q_{j+1}) / 2) = 0
    q_{j+1} - q_j - h / (2m) (p_{j+1} + p_j) = 0
"""
from __future__ import annotations

import math
from typing import Sequence

from ..model import PhaseState, Potential
from .newton import (
    SINGULAR_DET,
    NewtonConfig,
    NewtonDivergence,
    SingularJacobian,
    residual_scale,
)


def newmark_residual(pot: Potential, s: PhaseState, h: float, p: float, q: float) -> tuple[float, float]:
    mid = 0.5 * (s.q + q)
    return (
        p - s.p + h * pot.grad(mid),
        q - s.q - 0.5 * h / pot.mass * (p + s.p),
    )


def newmark_step(
    pot: Potential, s: PhaseState, h: float, cfg: NewtonConfig = NewtonConfig()
) -> tuple[PhaseState, int]:
    """Advance one Newmark step; returns the new state and the Newton iteration count."""
    m = pot.mass
    tol = cfg.residual_tol * residual_scale(pot, s)
    p, q = s.p, s.q
    it = 0
    while True:
        r1, r2 = newmark_residual(pot, s, h, p, q)
        res = max(abs(r1), abs(r2))
        if not math.isfinite(res):
            raise NewtonDivergence("non-finite Newmark residual", iters=it, residual=res)
        if res <= tol:
            return PhaseState(t=s.t + h, q=q, p=p), it
        if it == cfg.max_iters:
            raise NewtonDivergence(
                f"Newmark Newton did not converge in {it} iterations (residual {res:.3e})",
                iters=it, residual=res,
            )
        v2 = pot.hess(0.5 * (s.q + q))
        det = 1.0 + 0.25 * h * h / m * v2
        if abs(det) < SINGULAR_DET:
            raise SingularJacobian(f"Newmark Jacobian determinant {det:.3e}", iters=it, residual=res)
        # closed-form inverse of [[1, h V''/2], [-h/(2m), 1]]
        dp = -(r1 - 0.5 * h * v2 * r2) / det
        dq = -(0.5 * h / m * r1 + r2) / det
        p += dp
        q += dq
        it += 1


def discrete_lagrangian_newmark(pot: Potential, q_left: float, q_right: float, h: float) -> float:
    v = (q_right - q_left) / h
    return 0.5 * pot.mass * h * v * v - h * pot.value(0.5 * (q_left + q_right))


def discrete_action_newmark(pot: Potential, positions: Sequence[float], h: float) -> float:
    """Sum of midpoint discrete Lagrangians over consecutive pairs of nodes."""
    if len(positions) < 2:
        raise ValueError("need at least two positions")
    return math.fsum(
        discrete_lagrangian_newmark(pot, a, b, h) for a, b in zip(positions[:-1], positions[1:])
    )
