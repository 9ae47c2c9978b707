"""Simpson-quadrature variational scheme with quadratic internal interpolation.

Each step carries an internal node ``q_m ~ q(t_j + h/2)``. The unknowns
``(q_m, p_{j+1}, q_{j+1})`` solve

    q_m - h^2 / (8m) V'(q_m) = (q_j + q_{j+1}) / 2
    p_{j+1} - p_j + h/6 (V'_j + 4 V'_m + V'_{j+1}) = 0
    q_{j+1} - q_j - h^2 / (12m) (V'_{j+1} - V'_j) - h / (2m) (p_{j+1} + p_j) = 0
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from ..model import PhaseState, Potential
from .newton import (
    SINGULAR_DET,
    NewtonConfig,
    NewtonDivergence,
    SingularJacobian,
    residual_scale,
)
from .quadratic import QuadraticSegment, segment_derivatives


@dataclass(frozen=True)
class SimpsonStepResult:
    q_mid: float
    next: PhaseState
    newton_iters: int


def simpson_residual(pot: Potential, s: PhaseState, h: float, q_mid: float, p: float, q: float):
    m = pot.mass
    g0, gm, g1 = pot.grad(s.q), pot.grad(q_mid), pot.grad(q)
    return (
        q_mid - h * h / (8.0 * m) * gm - 0.5 * (s.q + q),
        p - s.p + h / 6.0 * (g0 + 4.0 * gm + g1),
        q - s.q - h * h / (12.0 * m) * (g1 - g0) - 0.5 * h / m * (p + s.p),
    )


def simpson_jacobian(pot: Potential, h: float, q_mid: float, q: float):
    """Jacobian of the residual with respect to ``(q_mid, p, q)``."""
    m = pot.mass
    th = h / m * pot.hess(q_mid)
    ph = h / m * pot.hess(q)
    return (
        (1.0 - h * th / 8.0, 0.0, -0.5),
        (2.0 / 3.0 * m * th, 1.0, m * ph / 6.0),
        (0.0, -0.5 * h / m, 1.0 - h * ph / 12.0),
    )


def simpson_jacobian_adjugate(pot: Potential, h: float, q_mid: float, q: float):
    """Adjugate of :func:`simpson_jacobian` and its determinant ``1 + h theta / 24``.

    ``theta = h V''(q_mid) / m``; the determinant does not depend on ``q``.
    """
    m = pot.mass
    th = h / m * pot.hess(q_mid)
    ph = h / m * pot.hess(q)
    adj = (
        (1.0, 0.25 * h / m, 0.5),
        (
            -2.0 / 3.0 * m * th + h * m * th * ph / 18.0,
            1.0 - h * th / 8.0 - h * ph / 12.0 + h * h * th * ph / 96.0,
            -m * th / 3.0 - m * ph / 6.0 + h * m * th * ph / 48.0,
        ),
        (-h * th / 3.0, 0.5 * h / m - h * h * th / (16.0 * m), 1.0 - h * th / 8.0),
    )
    return adj, 1.0 + h * th / 24.0


def simpson_step(
    pot: Potential, s: PhaseState, h: float, cfg: NewtonConfig = NewtonConfig()
) -> SimpsonStepResult:
    """Advance one Simpson step by Newton iteration on the three-equation system."""
    m = pot.mass
    tol = cfg.residual_tol * residual_scale(pot, s)
    exact = cfg.simpson_inverse == "exact"
    # first-order predictor
    x = [s.q + 0.5 * h * s.p / m, s.p, s.q + h * s.p / m]
    it = 0
    while True:
        r = simpson_residual(pot, s, h, *x)
        res = max(abs(v) for v in r)
        if not math.isfinite(res):
            raise NewtonDivergence("non-finite Simpson residual", iters=it, residual=res)
        if res <= tol:
            return SimpsonStepResult(
                q_mid=x[0], next=PhaseState(t=s.t + h, q=x[2], p=x[1]), newton_iters=it
            )
        if it == cfg.max_iters:
            raise NewtonDivergence(
                f"Simpson Newton did not converge in {it} iterations (residual {res:.3e})",
                iters=it, residual=res,
            )
        adj, det = simpson_jacobian_adjugate(pot, h, x[0], x[2])
        if abs(det) < SINGULAR_DET:
            raise SingularJacobian(f"Simpson Jacobian determinant {det:.3e}", iters=it, residual=res)
        scale = 1.0 / det if exact else 1.0
        for i in range(3):
            x[i] -= scale * (adj[i][0] * r[0] + adj[i][1] * r[1] + adj[i][2] * r[2])
        it += 1


def solve_midpoint(
    pot: Potential, q_left: float, q_right: float, h: float, cfg: NewtonConfig = NewtonConfig()
) -> float:
    """Internal node from the stationarity condition in ``q_mid`` alone."""
    m = pot.mass
    c = h * h / (8.0 * m)
    target = 0.5 * (q_left + q_right)
    tol = cfg.residual_tol * max(1.0, abs(target))
    qm = target
    for it in range(cfg.max_iters + 1):
        g = qm - c * pot.grad(qm) - target
        if not math.isfinite(g):
            break
        if abs(g) <= tol:
            return qm
        d = 1.0 - c * pot.hess(qm)
        if abs(d) < SINGULAR_DET:
            raise SingularJacobian(f"midpoint equation derivative {d:.3e}", iters=it, residual=abs(g))
        qm -= g / d
    raise NewtonDivergence("midpoint equation did not converge", iters=cfg.max_iters, residual=abs(g))


def momentum_from_nodes_simpson(
    pot: Potential, q_l: float, q_r: float, h: float, side: str, q_mid: float | None = None
) -> float:
    """Momentum at the left or right end of a step from its two end positions.

    ``q_mid`` is solved from the midpoint equation when not given.
    """
    if q_mid is None:
        q_mid = solve_midpoint(pot, q_l, q_r, h)
    base = pot.mass * (q_r - q_l) / h
    if side == "right":
        return base - h / 6.0 * (2.0 * pot.grad(q_mid) + pot.grad(q_r))
    if side == "left":
        return base + h / 6.0 * (pot.grad(q_l) + 2.0 * pot.grad(q_mid))
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def discrete_lagrangian_simpson(pot: Potential, q_left: float, q_mid: float, q_right: float, h: float) -> float:
    gl, gm, gr = segment_derivatives(QuadraticSegment(q_left, q_mid, q_right, h))
    kinetic = pot.mass * h / 12.0 * (gl * gl + 4.0 * gm * gm + gr * gr)
    return kinetic - h / 6.0 * (pot.value(q_left) + 4.0 * pot.value(q_mid) + pot.value(q_right))


def discrete_action_simpson(
    pot: Potential, nodes: Sequence[float], midpoints: Sequence[float], h: float
) -> float:
    """Sum of Simpson discrete Lagrangians; ``midpoints[j]`` lies between ``nodes[j]`` and ``nodes[j+1]``."""
    if len(nodes) < 2 or len(midpoints) != len(nodes) - 1:
        raise ValueError(
            f"need n+1 nodes and n midpoints, got {len(nodes)} nodes and {len(midpoints)} midpoints"
        )
    return math.fsum(
        discrete_lagrangian_simpson(pot, nodes[j], midpoints[j], nodes[j + 1], h)
        for j in range(len(midpoints))
    )
