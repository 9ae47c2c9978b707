"""Continuous one-degree-of-freedom mechanics.

A system is described by a constant mass and a potential energy ``V(q)``;
the Lagrangian is ``m/2 (dq/dt)^2 - V(q)`` and the Hamiltonian
``p^2 / (2m) + V(q)``. The nonlinear pendulum ``V(q) = m w^2 (1 - cos q)``
is the benchmark problem; harmonic and free-particle potentials are
provided for tests.
"""
from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass


@dataclass(frozen=True)
class PendulumParams:
    """Physical parameters of the nonlinear pendulum.

    Attributes
    ----------
    mass : float
        Constant mass, strictly positive.
    omega : float
        Small-amplitude angular frequency, strictly positive.
    theta0 : float
        Initial angle in radians, released at rest. Must lie in ``(0, pi)``.
    """

    mass: float = 1.0
    omega: float = 2.0 * math.pi
    theta0: float = 0.5 * math.pi

    def __post_init__(self):
        for name in ("mass", "omega", "theta0"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.mass <= 0.0:
            raise ValueError(f"mass must be positive, got {self.mass}")
        if self.omega <= 0.0:
            raise ValueError(f"omega must be positive, got {self.omega}")
        if not 0.0 < self.theta0 < math.pi:
            raise ValueError(f"theta0 must lie in (0, pi), got {self.theta0}")


@dataclass(frozen=True)
class PhaseState:
    """A point ``(p, q)`` of phase space at time ``t``."""

    t: float
    q: float
    p: float

    def __post_init__(self):
        if not (math.isfinite(self.t) and math.isfinite(self.q) and math.isfinite(self.p)):
            raise ValueError(f"non-finite phase state {self!r}")


class Potential(ABC):
    """Mass plus potential energy of a one-degree-of-freedom system.

    Subclasses provide the value and its first two derivatives. The
    ``force_scale`` is a characteristic magnitude of ``V''`` used to make
    Newton tolerances dimensionally meaningful.
    """

    mass: float

    @abstractmethod
    def value(self, q: float) -> float: ...

    @abstractmethod
    def grad(self, q: float) -> float: ...

    @abstractmethod
    def hess(self, q: float) -> float: ...

    @property
    def force_scale(self) -> float:
        return 0.0


@dataclass(frozen=True)
class PendulumPotential(Potential):
    """``V(q) = m w^2 (1 - cos q)``."""

    mass: float = 1.0
    omega: float = 2.0 * math.pi

    def __post_init__(self):
        if self.mass <= 0.0 or self.omega <= 0.0:
            raise ValueError("mass and omega must be positive")

    @classmethod
    def from_params(cls, params: PendulumParams) -> "PendulumPotential":
        return cls(mass=params.mass, omega=params.omega)

    @property
    def stiffness(self) -> float:
        return self.mass * self.omega * self.omega

    def value(self, q):
        return self.stiffness * (1.0 - math.cos(q))

    def grad(self, q):
        return self.stiffness * math.sin(q)

    def hess(self, q):
        return self.stiffness * math.cos(q)

    @property
    def force_scale(self):
        return self.stiffness


@dataclass(frozen=True)
class HarmonicPotential(Potential):
    """``V(q) = k q^2 / 2``."""

    mass: float = 1.0
    stiffness: float = 1.0

    def value(self, q):
        return 0.5 * self.stiffness * q * q

    def grad(self, q):
        return self.stiffness * q

    def hess(self, q):
        return self.stiffness

    @property
    def force_scale(self):
        return abs(self.stiffness)


@dataclass(frozen=True)
class ZeroPotential(Potential):
    """Free particle, ``V = 0``."""

    mass: float = 1.0

    def value(self, q):
        return 0.0

    def grad(self, q):
        return 0.0

    def hess(self, q):
        return 0.0


def potential_value(pot: Potential, q: float) -> float:
    return pot.value(q)


def potential_grad(pot: Potential, q: float) -> float:
    return pot.grad(q)


def potential_hess(pot: Potential, q: float) -> float:
    return pot.hess(q)


def hamiltonian(pot: Potential, s: PhaseState) -> float:
    """Total energy ``p^2 / (2m) + V(q)`` of a phase state."""
    return 0.5 * s.p * s.p / pot.mass + pot.value(s.q)
