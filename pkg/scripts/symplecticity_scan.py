"""Finite-difference one-step Jacobian determinant over random phase points."""
import argparse

import numpy as np

from simpson_symplectic import ExactPendulum, PendulumParams, PendulumPotential, PhaseState, Scheme
from simpson_symplectic.diagnostics import one_step_jacobian_det


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--points", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    params = PendulumParams()
    pot = PendulumPotential.from_params(params)
    T = ExactPendulum(params).period
    rng = np.random.default_rng(args.seed)
    w = params.omega
    for scheme in Scheme:
        for n in (10, 50, 200):
            dets = [
                one_step_jacobian_det(pot, scheme, PhaseState(0.0, rng.uniform(-3, 3), rng.uniform(-2 * w, 2 * w)), T / n)
                for _ in range(args.points)
            ]
            print(f"{scheme.value:<8} h=T/{n:<4} max|det-1|={np.max(np.abs(np.array(dets) - 1)):.2e}")


if __name__ == "__main__":
    main()
