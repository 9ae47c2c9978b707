"""Max-norm errors over one nonlinear period for N = 50, 100, 200, both schemes.

    python scripts/reproduce_table1.py [--out table1.csv]
"""
import argparse
import math

from simpson_symplectic import NewtonConfig, PendulumParams, Scheme
from simpson_symplectic.cli import cmd_convergence

REFERENCE = {
    "newmark": {"p": (2.93e-2, 7.32e-3, 1.83e-3), "q": (5.26e-3, 1.31e-3, 3.29e-4), "H": (9.06e-4, 2.29e-4, 5.73e-5)},
    "simpson": {"p": (6.08e-6, 3.78e-7, 2.36e-8), "q": (1.05e-6, 6.51e-8, 4.06e-9), "H": (1.30e-6, 8.42e-8, 5.25e-9)},
}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=None)
    args = ap.parse_args()
    params = PendulumParams(mass=1.0, omega=2 * math.pi, theta0=0.5 * math.pi)
    reports = cmd_convergence(params, list(Scheme), (50, 100, 200), 1.0, NewtonConfig(), args.out)
    print()
    print("ratio to published values")
    for rep in reports:
        ref = REFERENCE[rep.scheme.value]
        for i, row in enumerate(rep.rows):
            print(
                f"{rep.scheme.value:<8} N={row.n_steps:<4} "
                f"p {row.err_p / ref['p'][i]:.3f}  q {row.err_q / ref['q'][i]:.3f}  H {row.err_H / ref['H'][i]:.3f}"
            )


if __name__ == "__main__":
    main()
