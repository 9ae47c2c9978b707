"""Quadratic Lagrange interpolation on one time step with nodes at
``t = 0, h/2, h``."""
from __future__ import annotations

from dataclasses import dataclass


def basis_eval(theta: float) -> tuple[float, float, float]:
    """Values of the three nodal basis functions at reduced time ``theta``."""
    if not 0.0 <= theta <= 1.0:
        raise ValueError(f"theta must lie in [0, 1], got {theta}")
    return (
        (1.0 - theta) * (1.0 - 2.0 * theta),
        4.0 * theta * (1.0 - theta),
        theta * (2.0 * theta - 1.0),
    )


@dataclass(frozen=True)
class QuadraticSegment:
    q_left: float
    q_mid: float
    q_right: float
    h: float

    def __post_init__(self):
        if self.h == 0.0:
            raise ValueError("segment length must be nonzero")

    def value(self, t: float) -> float:
        """Interpolated position at local time ``t`` in ``[0, h]``."""
        return segment_value(self, t / self.h)


def segment_value(seg: QuadraticSegment, theta: float) -> float:
    b0, bm, b1 = basis_eval(theta)
    return seg.q_left * b0 + seg.q_mid * bm + seg.q_right * b1


def segment_derivatives(seg: QuadraticSegment) -> tuple[float, float, float]:
    """Time derivative of the interpolant at the left end, middle and right end."""
    ql, qm, qr, h = seg.q_left, seg.q_mid, seg.q_right, seg.h
    g_left = (-3.0 * ql + 4.0 * qm - qr) / h
    g_right = (ql - 4.0 * qm + 3.0 * qr) / h
    g_mid = (qr - ql) / h
    return g_left, g_mid, g_right
