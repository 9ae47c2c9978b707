"""Both schemes at 10 steps per period over 5 periods, next to the exact solution.

Writes one CSV per scheme into OUTDIR (default: current directory).
"""
import argparse
from pathlib import Path

from simpson_symplectic import PendulumParams, Scheme
from simpson_symplectic.cli import write_trajectory_csv
from simpson_symplectic.diagnostics import error_norms, simulate_pendulum


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("outdir", nargs="?", default=".")
    ap.add_argument("--steps-per-period", type=int, default=10)
    ap.add_argument("--periods", type=int, default=5)
    args = ap.parse_args()
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    params = PendulumParams()
    for scheme in Scheme:
        traj, oracle = simulate_pendulum(params, scheme, args.steps_per_period * args.periods, args.periods)
        path = outdir / f"figure2_{scheme.value}.csv"
        with open(path, "w", newline="") as fh:
            write_trajectory_csv(fh, traj, oracle)
        rep = error_norms(traj, oracle)
        print(f"{scheme.value:<8} err_q={rep.err_q:.3e} err_p={rep.err_p:.3e} -> {path}")


if __name__ == "__main__":
    main()
