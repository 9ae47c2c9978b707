"""Per-period energy band for long runs: bounded oscillation, no secular drift."""
import argparse

from simpson_symplectic import PendulumParams, Scheme
from simpson_symplectic.diagnostics import energy_band_per_period, simulate_pendulum


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--periods", type=int, default=50)
    ap.add_argument("--steps-per-period", type=int, default=50)
    args = ap.parse_args()
    for scheme in Scheme:
        n = args.periods * args.steps_per_period
        traj, _ = simulate_pendulum(PendulumParams(), scheme, n, float(args.periods))
        band = energy_band_per_period(traj, args.steps_per_period)
        print(f"{scheme.value:<8} first={band[0]:.3e} last={band[-1]:.3e} max={band.max():.3e} "
              f"growth={band[-1] / band[0]:.3f}")


if __name__ == "__main__":
    main()
