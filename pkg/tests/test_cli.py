import json

import pytest

from magrec.cli import main, parse_code_spec, parse_grid
from magrec.lattice import LatticeCode
from magrec.core import ExplicitCode
from magrec.tandem import SimplexCode


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_parse_grid():
    assert parse_grid("2") == [2]
    assert parse_grid("1:3") == [1, 2, 3]
    assert parse_grid("1,2,4") == [1, 2, 4]
    assert parse_grid("1:2,5") == [1, 2, 5]


def test_ball_example(capsys):
    code, out = run_cli(capsys, "ball", "--n", "2", "--t", "1", "--kp", "1", "--km", "1")
    assert code == 0
    assert out.splitlines()[1].split()[:5] == ["2", "1", "1", "1", "5"]


def test_intersect_oracle_match(capsys):
    code, out = run_cli(
        capsys, "intersect", "--n", "4", "--t", "1", "--kp", "1", "--km", "0", "--oracle"
    )
    assert code == 0
    row = out.splitlines()[1].split()
    assert row[4] == "1" and row[5] == "1" and row[6] == "MATCH"


def test_intersect_grid_skips_invalid(capsys):
    code, out = run_cli(
        capsys, "intersect", "--n", "2", "--t", "1:3", "--kp", "1", "--oracle"
    )
    assert code == 0
    assert "skipped" in out  # t = 3 > n = 2 is listed, not dropped


def test_reconstruct_exhaustive_example(capsys):
    code, out = run_cli(
        capsys,
        "reconstruct", "--alg", "min", "--code", "sum-mod:2",
        "--n", "2", "--t", "1", "--kp", "1", "--reads", "exhaustive",
    )
    assert code == 0
    row = out.splitlines()[1].split()
    # 3 subsets of the 3-element ball, all successful
    assert row[-3:] == ["3", "3", "0"]


def test_distance_records(capsys):
    code, out = run_cli(
        capsys, "distance", "--x", "1,1,0", "--y", "0,0,0", "--kp", "1",
        "--format", "records",
    )
    assert code == 0
    rec = json.loads(out.splitlines()[0])
    assert rec["distance"] == 2


def test_check_splitting(capsys):
    code, out = run_cli(
        capsys, "check-splitting", "--code", "splitter:group=Z7; s=[1,2]",
        "--kp", "1", "--km", "1", "--t", "1", "--oracle",
    )
    assert code == 0
    assert "MATCH" in out
    code, out = run_cli(
        capsys, "check-splitting", "--code", "splitter:group=Z2; s=[1,1]",
        "--kp", "1", "--km", "0", "--t", "2", "--oracle",
    )
    assert code == 0
    assert "False" in out and "MATCH" in out


def test_list_subcommand(capsys):
    code, out = run_cli(
        capsys, "list", "--alg", "sauer", "--code", "sum-mod:3",
        "--n", "4", "--t", "2", "--kp", "1", "--km", "1",
        "--delta", "1", "--a", "1", "--trials", "5", "--seed", "3",
    )
    assert code == 0
    assert "MATCH" in out


def test_simulate_records_deterministic(capsys):
    argv = [
        "simulate", "--alg", "min", "--code", "sum-mod:2",
        "--n", "2:3", "--t", "1:2", "--kp", "1",
        "--trials", "2", "--seed", "5", "--format", "records",
    ]
    code1, out1 = run_cli(capsys, *argv)
    code2, out2 = run_cli(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    first = json.loads(out1.splitlines()[0])
    assert first["rng"] == "philox" and first["elapsed_ns"] == 0
    assert first["success"] is True


def test_explain_legend(capsys):
    code, out = run_cli(
        capsys, "ball", "--n", "2", "--t", "1", "--kp", "1", "--explain"
    )
    assert code == 0
    assert "anchor legend" in out and "ball-size" in out


def test_tandem_subcommand(tmp_path, capsys):
    f = tmp_path / "code.txt"
    f.write_text("m=2,r=3,delta=1\n3,0,0\n0,3,0\n0,0,3\n1,1,1\n", encoding="utf-8")
    code, out = run_cli(capsys, "tandem", "--code", f"simplex:@{f}", "--t", "2")
    assert code == 0
    row = out.splitlines()[1].split()
    assert row[-1] == "0"  # zero failures


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.txt"
    code, _ = run_cli(
        capsys, "ball", "--n", "2", "--t", "1", "--kp", "1", "--out", str(target)
    )
    assert code == 0
    assert "size" in target.read_text(encoding="utf-8")


def test_code_spec_parsing(tmp_path):
    assert isinstance(parse_code_spec("sum-mod:3", n=2), LatticeCode)
    assert isinstance(
        parse_code_spec("splitter:group=Z4xZ3; s=[(1,0),(0,2)]"), LatticeCode
    )
    f = tmp_path / "code.txt"
    f.write_text("0,0\n2,2  # comment\n", encoding="utf-8")
    code = parse_code_spec(f"explicit:@{f}")
    assert isinstance(code, ExplicitCode) and len(code) == 2
    s = tmp_path / "simp.txt"
    s.write_text("m=1,r=2,delta=1\n2,0\n0,2\n", encoding="utf-8")
    assert isinstance(parse_code_spec(f"simplex:@{s}"), SimplexCode)
    with pytest.raises(ValueError):
        parse_code_spec("mystery:1")
    with pytest.raises(ValueError):
        parse_code_spec("sum-mod:2")  # needs n


def test_bad_flags(capsys):
    # an infeasible grid point is listed as skipped, not an error
    code, out = run_cli(capsys, "ball", "--n", "2", "--t", "1", "--kp", "0")
    assert code == 0
    assert "skipped" in out
    # a malformed code spec fails loudly
    code, _ = run_cli(
        capsys, "check-splitting", "--code", "nope:1", "--kp", "1", "--t", "1"
    )
    assert code == 1


def test_list_exhaustive_reads(capsys):
    code, out = run_cli(
        capsys,
        "list", "--alg", "sauer", "--code", "sum-mod:3",
        "--n", "3", "--t", "2", "--kp", "1", "--km", "1",
        "--delta", "1", "--a", "1", "--reads", "exhaustive",
    )
    assert code == 0
    row = out.splitlines()[1].split()
    assert row[8] == "171"  # C(19, 2) read sets, all checked
    assert row[-1] == "MATCH"


def test_delta_above_code_distance_rejected(capsys):
    code, _ = run_cli(
        capsys,
        "list", "--alg", "sauer", "--code", "sum-mod:3",
        "--n", "4", "--t", "2", "--kp", "1", "--km", "1",
        "--delta", "2", "--a", "0",
    )
    assert code == 1  # sum-mod:3 has distance 1 here; delta 2 breaks premises


def test_unique_decode_regime(tmp_path, capsys):
    # code distance beyond t: a single read reconstructs
    f = tmp_path / "code.txt"
    f.write_text("0,0\n3,3\n-3,3\n", encoding="utf-8")
    code, out = run_cli(
        capsys,
        "reconstruct", "--alg", "min", "--code", f"explicit:@{f}",
        "--n", "2", "--t", "1", "--kp", "1",
        "--reads", "exhaustive", "--x", "3,3",
    )
    assert code == 0
    row = out.splitlines()[1].split()
    assert row[7] == "1"  # N = 1
    assert row[-1] == "0"  # zero failures


def test_unknown_subcommand_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
