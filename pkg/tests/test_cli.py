"""Command-line surface: compute output format, CSV figures, verify wiring."""

import pytest

from definetti.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_examples(capsys):
    code, out, _ = run(capsys, "compute", "sym-epsilon", "n=4", "k=2", "r=0", "d=2")
    assert (code, out) == (0, "4/5 = 0.8\n")
    code, out, _ = run(capsys, "compute", "coherent-bound", "n=100", "k=10", "r=0")
    assert (code, out) == (0, "1/5 = 0.2\n")
    code, out, _ = run(capsys, "compute", "exact-radius", "d=2", "n=12", "k=5", "l=2")
    assert (code, out) == (0, "3\n")


def test_compute_su2_delta(capsys):
    code, out, _ = run(capsys, "compute", "su2-delta", "j1=1/2", "j2=1/2", "j=1", "m2=1/2", "r=0")
    assert (code, out) == (0, "2/3 = 0.666666666667\n")
    code, out, _ = run(
        capsys, "compute", "su2-delta", "j1=1/2", "j2=1/2", "j=1", "m2=-1/2", "r=0", "direction=up"
    )
    assert (code, out) == (0, "2/3 = 0.666666666667\n")


def test_compute_remaining_subcommands(capsys):
    code, out, _ = run(capsys, "compute", "closed-form-sum", "n=4", "k=2", "r=0")
    assert (code, out) == (0, "2/3 = 0.666666666667\n")
    code, out, _ = run(capsys, "compute", "heis-delta", "mu=1", "nu=1", "Delta=0", "r=0")
    assert (code, out) == (0, "1/2 = 0.5\n")
    code, out, _ = run(capsys, "compute", "heis-epsilon", "mu=50", "nu=50", "Delta=0", "r=3")
    assert (code, out) == (0, "1/2 = 0.5\n")
    code, out, _ = run(capsys, "compute", "heis-epsilon", "mu=1", "nu=1", "Delta=0", "r=2")
    assert (code, out) == (0, "0.707106781187\n")
    code, out, _ = run(capsys, "compute", "exact-radius", "lambda=10,2", "mu=5,0", "nu=7,0")
    assert (code, out) == (0, "3\n")
    code, out, _ = run(capsys, "compute", "sym-bound", "n=60", "k=20", "r=4", "d=3")
    assert code == 0
    assert out == "intermediate = 0.167154449115\nheadline = 1345.21634659\n"


def test_compute_usage_errors(capsys):
    for argv in (
        ["compute", "nonsense", "n=4"],
        ["compute", "sym-epsilon", "n=4", "k=2", "r=0"],  # missing d
        ["compute", "sym-epsilon", "n=4", "k=2", "r=0", "d=2", "x=1"],
        ["compute", "sym-epsilon", "n=4", "n=5", "k=2", "r=0", "d=2"],
        ["compute", "sym-epsilon", "n=4", "k=0", "r=0", "d=2"],
        ["compute", "sym-epsilon", "n=four", "k=2", "r=0", "d=2"],
        ["compute", "exact-radius", "d=3", "n=12", "k=5", "l=2"],
        ["compute", "exact-radius", "d=2", "n=12", "k=5", "l=9"],
        ["compute", "su2-delta", "j1=1/3", "j2=1/2", "j=1", "m2=1/2", "r=0"],
    ):
        code, out, err = run(capsys, *argv)
        assert code == 2, argv
        assert out == ""
    assert err  # diagnostics land on stderr


def test_figure_one_anchor_and_determinism(capsys):
    code, out, err = run(capsys, "figure", "1")
    assert code == 0 and err == ""
    lines = out.split("\n")
    assert lines[-1] == ""  # trailing newline
    header = lines[0].split(",")
    assert header[0] == "r"
    assert header[1] == "j=190"
    assert header[-1] == "j=200"
    row0 = lines[1].split(",")
    assert row0[0] == "0"
    assert row0[-1] == "0.498753117207"
    assert set(row0[1:-1]) == {"1"}  # window below the block until r reaches the gap
    assert lines[41].split(",")[0] == "40"
    code2, out2, _ = run(capsys, "figure", "1")
    assert (code2, out2) == (0, out)


def test_figure_two_vanishes_on_saturated_columns(capsys):
    code, out, _ = run(capsys, "figure", "2", "--j1", "15", "--j2", "15")
    assert code == 0
    lines = out.strip().split("\n")
    header = lines[0].split(",")
    assert header[1] == "j=0"
    j0 = header.index("j=0")
    for line in lines[1:]:
        assert line.split(",")[j0] == "0"


def test_figure_three_overlay_pairing(capsys):
    code, out, _ = run(capsys, "figure", "3")
    assert code == 0
    lines = out.split("\n")
    header = lines[0].split(",")
    assert header[1:12] == [f"Delta={d}" for d in range(11)]
    assert header[12:] == [f"su2_j={200 - d}" for d in range(11)]
    row0 = lines[1].split(",")
    assert row0[1] == "0.5"  # Delta=0 halves with every radius step
    assert row0[12] == "0.498753117207"
    assert lines[2].split(",")[1] == "0.25"
    assert lines[4].split(",")[1] == "0.0625"


def test_figure_out_roundtrip(tmp_path, capsys):
    target = tmp_path / "fig2.csv"
    code, out, err = run(capsys, "figure", "2", "--out", str(target))
    assert code == 0 and out == ""
    assert "wrote" in err
    code2, out2, _ = run(capsys, "figure", "2")
    assert target.read_text() == out2


def test_figure_usage_and_io_errors(capsys):
    code, _, _ = run(capsys, "figure", "5")
    assert code == 2
    code, _, err = run(capsys, "figure", "1", "--j-min", "abc")
    assert code == 2 and err
    code, _, err = run(capsys, "figure", "1", "--j-min", "205", "--j-max", "200")
    assert code == 2 and err
    code, _, err = run(capsys, "figure", "1", "--out", "/nonexistent/dir/f.csv")
    assert code == 1 and err


def test_verify_weights_suite(capsys):
    code, out, _ = run(capsys, "verify", "weights")
    assert code == 0
    lines = out.strip().split("\n")
    assert all(line.startswith("[PASS] weights:") for line in lines[:-1])
    passed, total = lines[-1].split()[0].split("/")
    assert passed == total
    assert lines[-1].endswith("checks passed")


def test_verify_usage_errors(capsys):
    code, _, _ = run(capsys, "verify", "bogus")
    assert code == 2
    code, _, err = run(capsys, "verify", "mc", "--samples", "10")
    assert code == 2 and err


def test_no_command_is_usage_error(capsys):
    assert run(capsys, )[0] == 2
    assert run(capsys, "bogus")[0] == 2
