import csv
import math

import pytest

from simpson_symplectic import PendulumParams, Scheme
from simpson_symplectic.cli import (
    CONVERGENCE_HEADER,
    EXIT_IO,
    EXIT_OK,
    EXIT_SOLVER,
    EXIT_VALIDATION,
    TRAJECTORY_HEADER,
    main,
    read_trajectory_csv,
)
from simpson_symplectic.diagnostics import simulate_pendulum


def _read(path):
    with open(path, newline="") as fh:
        return list(csv.reader(fh))


def test_simulate_writes_csv(tmp_path, capsys):
    out = tmp_path / "run.csv"
    assert main(["simulate", "--scheme", "simpson", "--periods", "5", "--steps-per-period", "10", "--out", str(out)]) == EXIT_OK
    rows = _read(out)
    assert rows[0] == TRAJECTORY_HEADER
    assert len(rows) == 52  # header + 51 nodes
    assert out.read_text().endswith("\n")
    summary = capsys.readouterr().out
    assert "err_q=" in summary and "max_newton_iters=" in summary


def test_csv_round_trip(tmp_path):
    out = tmp_path / "run.csv"
    assert main(["simulate", "--scheme", "newmark", "--periods", "1", "--steps-per-period", "30", "--out", str(out)]) == EXIT_OK
    traj, _ = simulate_pendulum(PendulumParams(), Scheme.NEWMARK, 30, 1.0)
    rows = read_trajectory_csv(out)
    assert len(rows) == len(traj.states)
    for row, s in zip(rows, traj.states):
        assert row["t"] == s.t and row["q"] == s.q and row["p"] == s.p


def test_simulate_to_stdout(capsys):
    assert main(["simulate", "--periods", "1", "--steps-per-period", "4"]) == EXIT_OK
    captured = capsys.readouterr()
    assert captured.out.splitlines()[0] == ",".join(TRAJECTORY_HEADER)
    assert "err_p=" in captured.err


def test_plot_script(tmp_path):
    out = tmp_path / "run.csv"
    assert main(["simulate", "--periods", "1", "--out", str(out), "--plot-script"]) == EXIT_OK
    script = (tmp_path / "run.csv.plot.py").read_text()
    compile(script, "plot.py", "exec")
    assert main(["simulate", "--periods", "1", "--plot-script"]) == EXIT_VALIDATION


@pytest.mark.parametrize(
    "argv",
    [
        ["simulate", "--periods", "0"],
        ["simulate", "--steps-per-period", "0"],
        ["simulate", "--theta0", "4.0"],
        ["simulate", "--mass", "-1"],
        ["simulate", "--scheme", "rk4"],
        ["simulate", "--omega", "abc"],
        ["convergence", "--meshes", "100,50"],
        ["convergence", "--meshes", "a,b"],
        ["exact", "--samples", "1"],
    ],
)
def test_validation_exit_code(argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == EXIT_VALIDATION


def test_solver_failure_exit_code(capsys):
    argv = ["simulate", "--periods", "1", "--steps-per-period", "1", "--newton-max-iters", "1"]
    assert main(argv) == EXIT_SOLVER
    assert "step 0" in capsys.readouterr().err


def test_io_failure_exit_code(tmp_path):
    assert main(["simulate", "--periods", "1", "--out", str(tmp_path / "missing" / "x.csv")]) == EXIT_IO


def test_convergence_defaults(tmp_path, capsys):
    out = tmp_path / "conv.csv"
    assert main(["convergence", "--out", str(out)]) == EXIT_OK
    rows = _read(out)
    assert rows[0] == CONVERGENCE_HEADER
    assert len(rows) == 7
    by = {(r[0], int(r[1])): r for r in rows[1:]}
    assert float(by["newmark", 50][3]) == pytest.approx(2.93e-2, rel=0.01)
    assert float(by["newmark", 100][3]) == pytest.approx(7.32e-3, rel=0.01)
    assert float(by["newmark", 200][3]) == pytest.approx(1.83e-3, rel=0.01)
    assert float(by["simpson", 50][5]) == pytest.approx(1.30e-6, rel=0.01)
    assert float(by["simpson", 100][5]) == pytest.approx(8.42e-8, rel=0.01)
    assert float(by["simpson", 200][5]) == pytest.approx(5.25e-9, rel=0.01)
    assert by["newmark", 50][6:] == ["", "", ""]
    assert float(by["newmark", 200][6]) == pytest.approx(2.0, abs=0.2)
    assert float(by["simpson", 200][8]) == pytest.approx(4.0, abs=0.3)
    table = capsys.readouterr().out
    assert table.splitlines()[0].split()[:2] == ["scheme", "N"]


def test_convergence_two_meshes(tmp_path):
    out = tmp_path / "conv.csv"
    assert main(["convergence", "--scheme", "simpson", "--meshes", "10,20", "--out", str(out)]) == EXIT_OK
    rows = _read(out)[1:]
    assert len(rows) == 2
    assert rows[0][6] == "" and rows[1][6] != ""


def test_exact_command(tmp_path, capsys):
    out = tmp_path / "exact.csv"
    assert main(["exact", "--samples", "2", "--out", str(out)]) == EXIT_OK
    rows = _read(out)
    assert rows[0] == ["t", "q", "p", "H"]
    assert len(rows) == 3
    assert float(rows[1][1]) == pytest.approx(0.5 * math.pi, abs=1e-12)
    assert float(rows[2][0]) == pytest.approx(5 * 1.1803405990160962, rel=1e-14)
    printed = capsys.readouterr().out
    assert float(printed.split("=")[1]) == pytest.approx(1.1803405990160962, abs=1e-12)


def test_exact_small_amplitude_period(capsys):
    assert main(["exact", "--theta0", "1e-3", "--samples", "3", "--out", "-"]) == EXIT_OK
    T = float(capsys.readouterr().err.split("=")[1])
    assert T == pytest.approx(1.0, rel=1e-6)
