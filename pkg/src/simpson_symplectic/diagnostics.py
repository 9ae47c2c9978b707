"""Structural and accuracy checks on the integrators.

Symplecticity via a finite-difference Jacobian of the one-step map, energy
series, max-norm errors against the exact pendulum, order estimates under
mesh doubling, discrete Euler-Lagrange residuals and action gradients.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from .elliptic import ExactPendulum
from .integrators import (
    NewtonConfig,
    Scheme,
    SchemeConfig,
    Trajectory,
    discrete_action_newmark,
    discrete_action_simpson,
    one_step,
    run_trajectory,
)
from .model import PendulumParams, PendulumPotential, PhaseState, Potential, hamiltonian


def one_step_jacobian_det(
    pot: Potential,
    scheme: Scheme,
    s: PhaseState,
    h: float,
    eps: float | None = None,
    newton: NewtonConfig = NewtonConfig(),
) -> float:
    """Determinant of the central-difference Jacobian of ``(p_j, q_j) -> (p_{j+1}, q_{j+1})``.

    ``eps`` defaults to ``1e-6 * max(1, |p|, |q|)``.
    """
    if eps is None:
        eps = 1e-6 * max(1.0, abs(s.p), abs(s.q))

    def image(p, q):
        nxt, _, _ = one_step(pot, scheme, PhaseState(t=s.t, q=q, p=p), h, newton)
        return nxt.p, nxt.q

    pp, qp = image(s.p + eps, s.q)
    pm, qm = image(s.p - eps, s.q)
    dpdp, dqdp = (pp - pm) / (2 * eps), (qp - qm) / (2 * eps)
    pp, qp = image(s.p, s.q + eps)
    pm, qm = image(s.p, s.q - eps)
    dpdq, dqdq = (pp - pm) / (2 * eps), (qp - qm) / (2 * eps)
    return dpdp * dqdq - dpdq * dqdp


def energy_series(traj: Trajectory) -> np.ndarray:
    """``H_j = p_j^2 / (2m) + V(q_j)`` at every node."""
    return np.array([hamiltonian(traj.potential, s) for s in traj.states])


@dataclass(frozen=True)
class ErrorReport:
    """Max-norm errors over the nodes of one run."""

    err_p: float
    err_q: float
    err_H: float
    n_steps: int
    h: float

    def __post_init__(self):
        if min(self.err_p, self.err_q, self.err_H) < 0.0:
            raise ValueError("errors must be non-negative")


def error_norms(traj: Trajectory, oracle: ExactPendulum) -> ErrorReport:
    """Max over nodes of ``|p_j - p(t_j)|``, ``|q_j - q(t_j)|`` and ``|H_j - H_0| / |H_0|``.

    Simpson midpoints are not sampled.
    """
    energies = energy_series(traj)
    h0 = energies[0]
    err_p = err_q = 0.0
    for s in traj.states:
        ex = oracle.state(s.t)
        err_p = max(err_p, abs(s.p - ex.p))
        err_q = max(err_q, abs(s.q - ex.q))
    err_H = float(np.max(np.abs(energies - h0)) / abs(h0)) if h0 != 0.0 else float(np.max(np.abs(energies)))
    return ErrorReport(err_p=err_p, err_q=err_q, err_H=err_H, n_steps=traj.config.n_steps, h=traj.config.h)


class OrderEstimate(NamedTuple):
    p: float
    q: float
    H: float


def _log2_ratio(coarse: float, fine: float) -> float:
    if not (coarse > 0.0 and fine > 0.0 and math.isfinite(coarse) and math.isfinite(fine)):
        return math.nan
    return math.log2(coarse / fine)


def estimate_order(coarse: ErrorReport, fine: ErrorReport) -> OrderEstimate:
    """Observed order ``log2(err_coarse / err_fine)`` per quantity.

    Zero or non-finite errors give ``nan`` for that quantity.
    """
    if fine.n_steps != 2 * coarse.n_steps:
        raise ValueError(f"mesh ratio must be 2, got {coarse.n_steps} -> {fine.n_steps}")
    return OrderEstimate(
        p=_log2_ratio(coarse.err_p, fine.err_p),
        q=_log2_ratio(coarse.err_q, fine.err_q),
        H=_log2_ratio(coarse.err_H, fine.err_H),
    )


@dataclass(frozen=True)
class ConvergenceReport:
    """Rows of a mesh-refinement study for one scheme.

    ``orders[i]`` compares ``rows[i-1]`` with ``rows[i]``; it is ``None`` for
    the first row and wherever the mesh ratio is not 2.
    """

    scheme: Scheme
    rows: tuple[ErrorReport, ...]
    orders: tuple[OrderEstimate | None, ...] = field(default=())

    def __post_init__(self):
        ns = [r.n_steps for r in self.rows]
        if any(b <= a for a, b in zip(ns, ns[1:])):
            raise ValueError(f"meshes must be strictly increasing, got {ns}")
        if not self.orders:
            orders = [None]
            for a, b in zip(self.rows, self.rows[1:]):
                orders.append(estimate_order(a, b) if b.n_steps == 2 * a.n_steps else None)
            object.__setattr__(self, "orders", tuple(orders))


def simulate_pendulum(
    params: PendulumParams,
    scheme: Scheme,
    n_steps: int,
    periods: float = 1.0,
    newton: NewtonConfig = NewtonConfig(),
) -> tuple[Trajectory, ExactPendulum]:
    """Run ``scheme`` from ``(p, q) = (0, theta0)`` over ``periods`` nonlinear periods in ``n_steps`` steps."""
    oracle = ExactPendulum(params)
    cfg = SchemeConfig(scheme=scheme, h=periods * oracle.period / n_steps, n_steps=n_steps, newton=newton)
    traj = run_trajectory(PendulumPotential.from_params(params), PhaseState(t=0.0, q=params.theta0, p=0.0), cfg)
    return traj, oracle


def convergence_study(
    params: PendulumParams,
    scheme: Scheme,
    meshes: Sequence[int] = (50, 100, 200),
    periods: float = 1.0,
    newton: NewtonConfig = NewtonConfig(),
) -> ConvergenceReport:
    rows = []
    for n in meshes:
        traj, oracle = simulate_pendulum(params, scheme, n, periods, newton)
        rows.append(error_norms(traj, oracle))
    return ConvergenceReport(scheme=Scheme(scheme), rows=tuple(rows))


def energy_band_per_period(traj: Trajectory, steps_per_period: int) -> np.ndarray:
    """Max relative energy deviation from ``H_0`` within each successive period."""
    energies = energy_series(traj)
    h0 = energies[0]
    dev = np.abs(energies - h0) / abs(h0)
    n_periods = (len(energies) - 1) // steps_per_period
    return np.array(
        [dev[k * steps_per_period : (k + 1) * steps_per_period + 1].max() for k in range(n_periods)]
    )


def newmark_three_point_residuals(traj: Trajectory) -> np.ndarray:
    """``(q_{j+1} - 2 q_j + q_{j-1}) / h^2 + (V'_{j+1/2} + V'_{j-1/2}) / (2m)`` at interior nodes,
    with ``V'_{j+1/2}`` evaluated at the average of neighbouring nodes."""
    pot, h = traj.potential, traj.config.h
    q = traj.q
    vmid = np.array([pot.grad(0.5 * (a + b)) for a, b in zip(q[:-1], q[1:])])
    return (q[2:] - 2.0 * q[1:-1] + q[:-2]) / h**2 + (vmid[1:] + vmid[:-1]) / (2.0 * pot.mass)


def simpson_three_point_residuals(traj: Trajectory) -> np.ndarray:
    """``(q_{j-1} - 2 q_j + q_{j+1}) / h^2 + (V'_{j-1/2} + V'_j + V'_{j+1/2}) / (3m)`` at interior nodes,
    with ``V'_{j+1/2}`` evaluated at the internal nodes."""
    if traj.midpoints is None:
        raise ValueError("trajectory has no internal nodes")
    pot, h = traj.potential, traj.config.h
    q = traj.q
    vmid = np.array([pot.grad(x) for x in traj.midpoints])
    vnode = np.array([pot.grad(x) for x in q[1:-1]])
    return (q[2:] - 2.0 * q[1:-1] + q[:-2]) / h**2 + (vmid[:-1] + vnode + vmid[1:]) / (3.0 * pot.mass)


def discrete_action(traj: Trajectory) -> float:
    h = traj.config.h
    if traj.config.scheme is Scheme.NEWMARK:
        return discrete_action_newmark(traj.potential, list(traj.q), h)
    return discrete_action_simpson(traj.potential, list(traj.q), list(traj.midpoints), h)


def action_gradient(traj: Trajectory, eps: float = 1e-6) -> np.ndarray:
    """Central-difference gradient of the discrete action in the interior degrees of freedom.

    Endpoints are held fixed. Newmark: interior nodes. Simpson: interior nodes
    followed by every internal midpoint node.
    """
    pot, h = traj.potential, traj.config.h
    nodes = list(traj.q)
    simpson = traj.config.scheme is Scheme.SIMPSON
    mids = list(traj.midpoints) if simpson else None

    def action(ns, ms):
        if simpson:
            return discrete_action_simpson(pot, ns, ms, h)
        return discrete_action_newmark(pot, ns, h)

    grad = []
    for j in range(1, len(nodes) - 1):
        up, dn = nodes.copy(), nodes.copy()
        up[j] += eps
        dn[j] -= eps
        grad.append((action(up, mids) - action(dn, mids)) / (2 * eps))
    if simpson:
        for j in range(len(mids)):
            up, dn = mids.copy(), mids.copy()
            up[j] += eps
            dn[j] -= eps
            grad.append((action(nodes, up) - action(nodes, dn)) / (2 * eps))
    return np.array(grad)


def action_scale(traj: Trajectory) -> float:
    """Sum of absolute kinetic and potential contributions; a magnitude for the action."""
    pot, h = traj.potential, traj.config.h
    kin = 0.5 * traj.config.n_steps * h * float(np.mean(traj.p**2)) / pot.mass
    pot_part = h * float(np.sum([abs(pot.value(x)) for x in traj.q]))
    return max(1.0, kin + pot_part)
