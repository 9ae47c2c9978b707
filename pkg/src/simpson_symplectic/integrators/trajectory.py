"""Multi-step runs of either stepper."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from ..model import PhaseState, Potential
from .newmark import newmark_step
from .newton import NewtonConfig, StepperError
from .simpson import simpson_step


class Scheme(str, enum.Enum):
    NEWMARK = "newmark"
    SIMPSON = "simpson"


@dataclass(frozen=True)
class SchemeConfig:
    scheme: Scheme
    h: float
    n_steps: int
    newton: NewtonConfig = field(default_factory=NewtonConfig)

    def __post_init__(self):
        object.__setattr__(self, "scheme", Scheme(self.scheme))
        if not self.h > 0.0:
            raise ValueError(f"h must be positive, got {self.h}")
        if int(self.n_steps) != self.n_steps or self.n_steps < 1:
            raise ValueError(f"n_steps must be a positive integer, got {self.n_steps}")

    @property
    def final_time(self) -> float:
        return self.n_steps * self.h


@dataclass(frozen=True)
class Trajectory:
    states: tuple[PhaseState, ...]
    midpoints: tuple[float, ...] | None
    config: SchemeConfig
    potential: Potential
    newton_iters: tuple[int, ...]

    @property
    def max_newton_iters(self) -> int:
        return max(self.newton_iters)

    @property
    def t(self) -> np.ndarray:
        return np.array([s.t for s in self.states])

    @property
    def q(self) -> np.ndarray:
        return np.array([s.q for s in self.states])

    @property
    def p(self) -> np.ndarray:
        return np.array([s.p for s in self.states])


def one_step(pot: Potential, scheme: Scheme, s: PhaseState, h: float, cfg: NewtonConfig = NewtonConfig()):
    """Apply one step of ``scheme``; returns ``(next_state, q_mid or None, iters)``."""
    if Scheme(scheme) is Scheme.NEWMARK:
        nxt, iters = newmark_step(pot, s, h, cfg)
        return nxt, None, iters
    res = simpson_step(pot, s, h, cfg)
    return res.next, res.q_mid, res.newton_iters


def run_trajectory(pot: Potential, initial: PhaseState, cfg: SchemeConfig) -> Trajectory:
    """Iterate the selected one-step map ``cfg.n_steps`` times from ``initial``.

    Node times are ``initial.t + j*h``, computed rather than accumulated.
    """
    states = [initial]
    mids: list[float] = []
    iters: list[int] = []
    s = initial
    for j in range(cfg.n_steps):
        try:
            nxt, qm, it = one_step(pot, cfg.scheme, s, cfg.h, cfg.newton)
        except StepperError as exc:
            exc.step_index = j
            raise
        s = PhaseState(t=initial.t + (j + 1) * cfg.h, q=nxt.q, p=nxt.p)
        states.append(s)
        iters.append(it)
        if qm is not None:
            mids.append(qm)
    return Trajectory(
        states=tuple(states),
        midpoints=tuple(mids) if cfg.scheme is Scheme.SIMPSON else None,
        config=cfg,
        potential=pot,
        newton_iters=tuple(iters),
    )
