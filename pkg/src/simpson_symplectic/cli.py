"""Command-line front end.

    simpson-symplectic simulate    --scheme simpson --periods 5 --steps-per-period 10 --out run.csv
    simpson-symplectic convergence --meshes 50,100,200 --out table.csv
    simpson-symplectic exact       --samples 1001 --out exact.csv

Exit codes: 0 success, 2 invalid arguments, 3 solver failure, 4 I/O failure.
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from .diagnostics import ConvergenceReport, convergence_study, error_norms, energy_series, simulate_pendulum
from .elliptic import ExactPendulum
from .integrators import NewtonConfig, Scheme, StepperError, Trajectory
from .model import PendulumParams, PendulumPotential, hamiltonian

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_SOLVER = 3
EXIT_IO = 4

TRAJECTORY_HEADER = ["step", "t", "q", "p", "H", "q_exact", "p_exact", "err_q", "err_p"]
CONVERGENCE_HEADER = ["scheme", "N", "h", "err_p", "err_q", "err_H", "order_p", "order_q", "order_H"]
EXACT_HEADER = ["t", "q", "p", "H"]


def fmt(x: float) -> str:
    return format(x, ".17g")


@dataclass(frozen=True)
class RunSpec:
    scheme: Scheme
    theta0: float = 0.5 * math.pi
    omega: float = 2.0 * math.pi
    mass: float = 1.0
    periods: float = 5.0
    steps_per_period: int = 10
    out: str | None = None

    def __post_init__(self):
        if not (math.isfinite(self.periods) and self.periods > 0.0):
            raise ValueError(f"periods must be positive, got {self.periods}")
        if self.steps_per_period < 1:
            raise ValueError(f"steps_per_period must be >= 1, got {self.steps_per_period}")

    @property
    def params(self) -> PendulumParams:
        return PendulumParams(mass=self.mass, omega=self.omega, theta0=self.theta0)

    @property
    def n_steps(self) -> int:
        return max(1, round(self.periods * self.steps_per_period))


class ValidationError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_VALIDATION, f"{self.prog}: error: {message}\n")


@contextlib.contextmanager
def _open_out(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def trajectory_rows(traj: Trajectory, oracle: ExactPendulum):
    energies = energy_series(traj)
    for j, (s, H) in enumerate(zip(traj.states, energies)):
        ex = oracle.state(s.t)
        yield [j, s.t, s.q, s.p, H, ex.q, ex.p, s.q - ex.q, s.p - ex.p]


def write_trajectory_csv(fh, traj: Trajectory, oracle: ExactPendulum) -> int:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(TRAJECTORY_HEADER)
    n = 0
    for row in trajectory_rows(traj, oracle):
        w.writerow([row[0]] + [fmt(x) for x in row[1:]])
        n += 1
    return n


def read_trajectory_csv(path) -> list[dict]:
    """Parse a file written by ``simulate`` back into typed rows."""
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != TRAJECTORY_HEADER:
            raise ValueError(f"unexpected header {reader.fieldnames}")
        return [{k: (int(v) if k == "step" else float(v)) for k, v in row.items()} for row in reader]


def convergence_rows(reports: list[ConvergenceReport]):
    for rep in reports:
        for row, order in zip(rep.rows, rep.orders):
            orders = ["", "", ""] if order is None else [fmt(order.p), fmt(order.q), fmt(order.H)]
            yield [rep.scheme.value, str(row.n_steps), fmt(row.h), fmt(row.err_p), fmt(row.err_q), fmt(row.err_H), *orders]


def format_convergence_table(reports: list[ConvergenceReport]) -> str:
    lines = [f"{'scheme':<8} {'N':>6} {'err_p':>10} {'err_q':>10} {'err_H':>10} {'ord_p':>6} {'ord_q':>6} {'ord_H':>6}"]
    for rep in reports:
        for row, order in zip(rep.rows, rep.orders):
            o = ["", "", ""] if order is None else [f"{v:.2f}" for v in order]
            lines.append(
                f"{rep.scheme.value:<8} {row.n_steps:>6} {row.err_p:>10.3e} {row.err_q:>10.3e} {row.err_H:>10.3e}"
                f" {o[0]:>6} {o[1]:>6} {o[2]:>6}"
            )
    return "\n".join(lines)


PLOT_TEMPLATE = """\
import csv
import matplotlib.pyplot as plt

with open({csv_path!r}) as fh:
    rows = list(csv.DictReader(fh))
t = [float(r["t"]) for r in rows]
fig, axes = plt.subplots(2, 1, sharex=True)
for ax, key in zip(axes, ("q", "p")):
    ax.plot(t, [float(r[key]) for r in rows], "o-", label=key)
    if key + "_exact" in rows[0]:
        ax.plot(t, [float(r[key + "_exact"]) for r in rows], "-", label=key + " exact")
    ax.set_ylabel(key)
    ax.legend()
axes[-1].set_xlabel("t")
plt.show()
"""


def _write_plot_script(csv_path: str | None):
    if csv_path is None or csv_path == "-":
        raise ValidationError("--plot-script requires --out FILE")
    Path(csv_path + ".plot.py").write_text(PLOT_TEMPLATE.format(csv_path=csv_path))


def cmd_simulate(spec: RunSpec, newton: NewtonConfig, plot_script: bool = False) -> int:
    traj, oracle = simulate_pendulum(spec.params, spec.scheme, spec.n_steps, spec.periods, newton)
    with _open_out(spec.out) as fh:
        write_trajectory_csv(fh, traj, oracle)
    if plot_script:
        _write_plot_script(spec.out)
    rep = error_norms(traj, oracle)
    summary = (
        f"scheme={spec.scheme.value} N={spec.n_steps} h={rep.h:.6g} "
        f"err_p={rep.err_p:.3e} err_q={rep.err_q:.3e} err_H={rep.err_H:.3e} "
        f"max_newton_iters={traj.max_newton_iters}"
    )
    print(summary, file=sys.stderr if spec.out in (None, "-") else sys.stdout)
    return EXIT_OK


def cmd_convergence(params: PendulumParams, schemes, meshes, periods: float, newton: NewtonConfig, out=None):
    meshes = list(meshes)
    if any(b <= a for a, b in zip(meshes, meshes[1:])) or min(meshes) < 1:
        raise ValidationError(f"meshes must be positive and strictly increasing, got {meshes}")
    reports = [convergence_study(params, s, meshes, periods, newton) for s in schemes]
    if out is not None:
        with _open_out(out) as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(CONVERGENCE_HEADER)
            w.writerows(convergence_rows(reports))
    print(format_convergence_table(reports), file=sys.stderr if out == "-" else sys.stdout)
    return reports


def cmd_exact(params: PendulumParams, samples: int, periods: float, out=None, plot_script=False) -> float:
    if samples < 2:
        raise ValidationError(f"samples must be >= 2, got {samples}")
    if not periods > 0.0:
        raise ValidationError(f"periods must be positive, got {periods}")
    oracle = ExactPendulum(params)
    pot = PendulumPotential.from_params(params)
    t_end = periods * oracle.period
    with _open_out(out) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(EXACT_HEADER)
        for i in range(samples):
            t = t_end * i / (samples - 1)
            s = oracle.state(t)
            w.writerow([fmt(t), fmt(s.q), fmt(s.p), fmt(hamiltonian(pot, s))])
    if plot_script:
        _write_plot_script(out)
    print(f"period T = {fmt(oracle.period)}", file=sys.stderr if out in (None, "-") else sys.stdout)
    return oracle.period


def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _mesh_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="simpson-symplectic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def physics(p):
        p.add_argument("--theta0", type=float, default=0.5 * math.pi)
        p.add_argument("--omega", type=float, default=2.0 * math.pi)
        p.add_argument("--mass", type=float, default=1.0)

    def newton(p):
        p.add_argument("--newton-tol", type=float, default=NewtonConfig.residual_tol)
        p.add_argument("--newton-max-iters", type=_positive_int, default=NewtonConfig.max_iters)

    sim = sub.add_parser("simulate", help="run one scheme and write a CSV time series")
    sim.add_argument("--scheme", choices=[s.value for s in Scheme], default=Scheme.SIMPSON.value)
    physics(sim)
    sim.add_argument("--periods", type=float, default=5.0)
    sim.add_argument("--steps-per-period", type=int, default=10)
    sim.add_argument("--out", default=None, help="CSV path (default: standard output)")
    sim.add_argument("--plot-script", action="store_true", help="also write OUT.plot.py")
    newton(sim)

    conv = sub.add_parser("convergence", help="max-norm errors and orders under mesh doubling")
    conv.add_argument("--scheme", choices=["both"] + [s.value for s in Scheme], default="both")
    physics(conv)
    conv.add_argument("--periods", type=float, default=1.0)
    conv.add_argument("--meshes", type=_mesh_list, default=[50, 100, 200])
    conv.add_argument("--out", default=None, help="CSV report path")
    newton(conv)

    ex = sub.add_parser("exact", help="sample the closed-form pendulum solution")
    physics(ex)
    ex.add_argument("--periods", type=float, default=5.0)
    ex.add_argument("--samples", type=int, default=501)
    ex.add_argument("--out", default=None, help="CSV path (default: standard output)")
    ex.add_argument("--plot-script", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        params = PendulumParams(mass=args.mass, omega=args.omega, theta0=args.theta0)
        if args.command == "simulate":
            spec = RunSpec(
                scheme=Scheme(args.scheme), theta0=args.theta0, omega=args.omega, mass=args.mass,
                periods=args.periods, steps_per_period=args.steps_per_period, out=args.out,
            )
            cfg = NewtonConfig(residual_tol=args.newton_tol, max_iters=args.newton_max_iters)
            return cmd_simulate(spec, cfg, args.plot_script)
        if args.command == "convergence":
            cfg = NewtonConfig(residual_tol=args.newton_tol, max_iters=args.newton_max_iters)
            schemes = list(Scheme) if args.scheme == "both" else [Scheme(args.scheme)]
            cmd_convergence(params, schemes, args.meshes, args.periods, cfg, args.out)
            return EXIT_OK
        cmd_exact(params, args.samples, args.periods, args.out, args.plot_script)
        return EXIT_OK
    except (ValueError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except StepperError as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
