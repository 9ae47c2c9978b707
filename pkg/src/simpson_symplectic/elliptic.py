"""Elliptic integrals of the first kind, the Jacobi amplitude, and the
closed-form nonlinear pendulum.

All functions take the *parameter* ``m = k**2`` as their second argument,
never the modulus ``k``.

* ``complete_K`` uses the arithmetic-geometric mean.
* ``incomplete_F`` uses Carlson's symmetric integral ``R_F``.
* ``jacobi_am`` inverts ``F`` by safeguarded Newton iteration.

The pendulum released at rest from ``theta0`` has, with ``k = sin(theta0/2)``,

    phi(t)   = am(K(k^2) - w t, k^2)
    q(t)     = 2 arcsin(k sin phi)
    dq/dt    = -2 w k cos phi

and period ``T = 4 K(k^2) / w``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .model import PendulumParams, PendulumPotential, PhaseState, hamiltonian

__all__ = [
    "EllipticDomainError",
    "ExactPendulum",
    "agm",
    "carlson_rf",
    "complete_K",
    "exact_pendulum_period",
    "exact_pendulum_state",
    "incomplete_F",
    "jacobi_am",
]

_AGM_RTOL = 1e-15
_MAX_AGM_ITERS = 64


class EllipticDomainError(ValueError):
    """Argument outside the domain supported by the elliptic routines."""


def _check_parameter(m_param: float) -> None:
    if not (math.isfinite(m_param) and 0.0 <= m_param < 1.0):
        raise EllipticDomainError(f"parameter m must lie in [0, 1), got {m_param}")


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two positive numbers."""
    if not (a > 0.0 and b > 0.0) or not (math.isfinite(a) and math.isfinite(b)):
        raise EllipticDomainError(f"agm requires positive finite arguments, got ({a}, {b})")
    for _ in range(_MAX_AGM_ITERS):
        if abs(a - b) <= _AGM_RTOL * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def complete_K(m_param: float) -> float:
    """Complete elliptic integral of the first kind, ``K(m) = pi / (2 agm(1, sqrt(1 - m)))``."""
    _check_parameter(m_param)
    return 0.5 * math.pi / agm(1.0, math.sqrt(1.0 - m_param))


def carlson_rf(x: float, y: float, z: float) -> float:
    """Carlson's symmetric elliptic integral ``R_F(x, y, z)``.

    Duplication theorem followed by the fifth-order symmetric series. At most
    one argument may be zero.
    """
    if min(x, y, z) < 0.0 or (x == 0.0) + (y == 0.0) + (z == 0.0) > 1:
        raise EllipticDomainError(f"invalid R_F arguments ({x}, {y}, {z})")
    errtol = 0.0025  # series truncation ~ errtol**6 / 4
    while True:
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * (sy + sz) + sy * sz
        x, y, z = 0.25 * (x + lam), 0.25 * (y + lam), 0.25 * (z + lam)
        mean = (x + y + z) / 3.0
        dx, dy, dz = 1.0 - x / mean, 1.0 - y / mean, 1.0 - z / mean
        if max(abs(dx), abs(dy), abs(dz)) < errtol:
            break
    e2 = dx * dy - dz * dz
    e3 = dx * dy * dz
    return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / math.sqrt(mean)


def incomplete_F(phi: float, m_param: float) -> float:
    """Incomplete elliptic integral of the first kind ``F(phi, m)``.

    Any finite ``phi`` is accepted; it is reduced to ``[-pi/2, pi/2]`` with
    ``F(phi + n pi, m) = F(phi, m) + 2 n K(m)``.
    """
    _check_parameter(m_param)
    if not math.isfinite(phi):
        raise EllipticDomainError(f"phi must be finite, got {phi}")
    n = round(phi / math.pi)
    r = phi - n * math.pi
    s = math.sin(r)
    c2 = math.cos(r) ** 2
    val = 0.0 if s == 0.0 else s * carlson_rf(c2, 1.0 - m_param * s * s, 1.0)
    if n:
        val += 2.0 * n * complete_K(m_param)
    return val


def _am_reduced(u: float, m_param: float, quarter: float) -> float:
    # |u| <= K: Newton on F(phi) - u with a bisection bracket on [-pi/2, pi/2]
    lo, hi = -0.5 * math.pi, 0.5 * math.pi
    if u >= quarter:
        return hi
    if u <= -quarter:
        return lo
    phi = 0.5 * math.pi * u / quarter
    for _ in range(100):
        g = incomplete_F(phi, m_param) - u
        if g == 0.0:
            return phi
        if g > 0.0:
            hi = phi
        else:
            lo = phi
        step = g * math.sqrt(1.0 - m_param * math.sin(phi) ** 2)
        new = phi - step
        if not lo < new < hi:
            new = 0.5 * (lo + hi)
        if abs(new - phi) <= 4e-16 * max(1.0, abs(phi)):
            return new
        phi = new
    return phi


def jacobi_am(u: float, m_param: float) -> float:
    """Jacobi amplitude, the inverse of ``phi -> F(phi, m)``.

    General ``u`` is reduced with ``am(u + 2 n K) = am(u) + n pi``.
    """
    _check_parameter(m_param)
    if not math.isfinite(u):
        raise EllipticDomainError(f"u must be finite, got {u}")
    if m_param == 0.0:
        return u
    quarter = complete_K(m_param)
    n = round(u / (2.0 * quarter))
    return _am_reduced(u - 2.0 * n * quarter, m_param, quarter) + n * math.pi


@dataclass(frozen=True)
class ExactPendulum:
    """Closed-form solution of the pendulum released at rest from ``theta0``."""

    params: PendulumParams
    k: float = field(init=False)
    m_param: float = field(init=False)
    quarter_period_u: float = field(init=False)
    period: float = field(init=False)

    def __post_init__(self):
        k = math.sin(0.5 * self.params.theta0)
        m_param = k * k
        quarter = complete_K(m_param)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "m_param", m_param)
        object.__setattr__(self, "quarter_period_u", quarter)
        object.__setattr__(self, "period", 4.0 * quarter / self.params.omega)

    @property
    def potential(self) -> PendulumPotential:
        return PendulumPotential.from_params(self.params)

    @property
    def energy(self) -> float:
        """Conserved total energy ``m w^2 (1 - cos theta0)``."""
        return self.potential.value(self.params.theta0)

    def state(self, t: float) -> PhaseState:
        omega = self.params.omega
        tau = math.fmod(t, self.period)
        if tau < 0.0:
            tau += self.period
        phi = jacobi_am(self.quarter_period_u - omega * tau, self.m_param)
        q = 2.0 * math.asin(self.k * math.sin(phi))
        p = -2.0 * self.params.mass * omega * self.k * math.cos(phi)
        return PhaseState(t=t, q=q, p=p)

    def energy_at(self, t: float) -> float:
        return hamiltonian(self.potential, self.state(t))


def exact_pendulum_period(params: PendulumParams) -> float:
    """Nonlinear period ``T = 4 K(sin^2(theta0/2)) / w``."""
    return ExactPendulum(params).period


def exact_pendulum_state(params: PendulumParams, t: float) -> PhaseState:
    return ExactPendulum(params).state(t)
