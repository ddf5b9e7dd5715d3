import json
import subprocess
import sys

import pytest

from scgroups.cli import main, parse_expression, parse_matrix_arg


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_group_rp1_gf11(capsys):
    code, out, _ = run_cli(["group", "RP1", "--ring", "gf(11)", "--format", "json"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["odd_part"] == [3]
    assert rep["ring"] == "gf(11)"


def test_group_md_format(capsys):
    code, out, _ = run_cli(["--format", "md", "group", "P", "--ring", "gf(7)"], capsys)
    assert code == 0
    assert out.startswith("|")


def test_group_all_builders(capsys):
    for which in ("P", "B", "S2", "K2", "GW", "I", "I2", "E2"):
        code, out, _ = run_cli(["group", which, "--ring", "gf(7)"], capsys)
        assert code == 0
        assert json.loads(out)["group"] == which


def test_verify_key_identity_exit_zero(capsys):
    code, out, _ = run_cli(["verify", "key-identity", "--ring", "z/7^2"], capsys)
    assert code == 0
    assert "[ok]" in out


def test_verify_usage_error(capsys):
    code, _, err = run_cli(["verify", "key-identity"], capsys)
    assert code == 2
    assert "ring" in err


def test_usage_error_bad_ring(capsys):
    code, _, err = run_cli(["group", "P", "--ring", "gf(6)"], capsys)
    assert code == 2
    assert "gf(6)" in err


def test_specialize(capsys):
    code, out, _ = run_cli(["specialize", "--p", "11", "--expr", "<<11>>*g(2)"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["delta_0"]["zero"] is True
    assert rep["delta_pi"]["zero"] is False


def test_specialize_relation_dies(capsys):
    # the five-term relation Y_{2,3} written out by hand specializes to zero
    expr = "[2] - [3] + <2>*[3/2] - <-2>*[3/4] + <-1>*[1/2]"
    code, out, _ = run_cli(["specialize", "--p", "11", "--expr", expr], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["delta_0"]["zero"] and rep["delta_pi"]["zero"]


def test_expression_parser():
    kind, val = parse_expression("2*[3] + psi1(2) - C")
    assert kind == "mod"
    kind, val = parse_expression("<<5>>*<<7>>")
    assert kind == "ring"
    with pytest.raises(ValueError):
        parse_expression("[0]")
    with pytest.raises(ValueError):
        parse_expression("[2] * [3]")
    with pytest.raises(ValueError):
        parse_expression("1/2 * [3]")


def test_amalgam_command(capsys):
    code, out, _ = run_cli(["amalgam", "--p", "7", "--matrix", "1,1/7;0,1"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["product_ok"] and rep["alternating"]
    assert rep["length"] == 3


def test_tree_ball(capsys):
    code, out, _ = run_cli(["tree", "ball", "--p", "7", "--radius", "3"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["vertices"] == rep["formula"] == 1 + 8 * (7**3 - 1) // 6
    assert rep["is_tree"] is True


def test_tree_ball_dot(capsys):
    code, out, _ = run_cli(["tree", "ball", "--p", "5", "--radius", "1", "--dot"], capsys)
    assert code == 0
    assert out.startswith("graph tree {")
    assert out.count("--") == 6


def test_tree_vertex(capsys):
    code, out, _ = run_cli(
        ["tree", "vertex", "--p", "7", "--matrix", "7,0;0,1"], capsys
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["a"] == 1 and rep["c"] == "0"


def test_pbar_table_formats(capsys):
    code, out, _ = run_cli(["pbar-table", "--p-min", "11", "--p-max", "17", "--format", "json"], capsys)
    assert code == 0
    rows = json.loads(out)
    assert rows[0]["p"] == 11 and rows[0]["pbar_odd"] == 1
    code, out, _ = run_cli(["pbar-table", "--p-min", "11", "--p-max", "13", "--format", "csv"], capsys)
    assert code == 0
    assert out.splitlines()[0].startswith("p,")
    code, out, _ = run_cli(["--format", "md", "pbar-table", "--p-min", "11", "--p-max", "13"], capsys)
    assert code == 0
    assert out.startswith("| p |")


def test_deterministic_output():
    cmd = [sys.executable, "-m", "scgroups.cli", "verify", "linalg", "--seed", "7"]
    a = subprocess.run(cmd, capture_output=True, cwd="/root/pkg")
    b = subprocess.run(cmd, capture_output=True, cwd="/root/pkg")
    assert a.stdout == b.stdout and a.returncode == b.returncode == 0


def test_argparse_usage_exit_code():
    proc = subprocess.run(
        [sys.executable, "-m", "scgroups.cli", "group"],
        capture_output=True,
        cwd="/root/pkg",
    )
    assert proc.returncode == 2
