from __future__ import annotations

import json
import subprocess
import sys

import pytest

from xyzcode.cli import EXIT_BUDGET, EXIT_OK, EXIT_PARSE, main


@pytest.fixture
def toy_files(tmp_path):
    paths = []
    for name in ("h1", "h2", "h3"):
        p = tmp_path / f"{name}.txt"
        p.write_text("1 1\n1\n")
        paths.append(str(p))
    return paths


def toy_args(paths):
    return ["--h1", paths[0], "--h2", paths[1], "--h3", paths[2]]


def run(capsys, argv):
    rc = main(argv)
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_validate_toy(capsys, toy_files):
    rc, out, _ = run(capsys, ["validate", *toy_args(toy_files)])
    assert rc == EXIT_OK
    assert "abelian: yes, minus_one: no, in_T: yes" in out


def test_validate_singular(capsys, tmp_path):
    spec = tmp_path / "s.txt"
    spec.write_text("9 5 7\nP1: 0,1,-1\nP2: 0,1,-1\nP3: 0,1,-1\n")
    rc, out, _ = run(capsys, ["validate", "--cyclic", str(spec)])
    assert rc == EXIT_OK
    assert "in_T: no (H1 is singular)" in out


def test_parse_error_names_line(capsys, tmp_path, toy_files):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 2\n10\n1\n")
    rc, _, err = run(capsys, ["validate", "--h1", str(bad), "--h2", toy_files[1], "--h3", toy_files[2]])
    assert rc == EXIT_PARSE
    assert "line 3" in err and "bad.txt" in err


def test_dim_examples(capsys):
    rc, out, _ = run(capsys, ["dim", "--chamon", "3", "4", "5"])
    assert rc == EXIT_OK and "k=4" in out
    rc, out, _ = run(capsys, ["dim", "--3dxyz", "5", "7", "11"])
    assert rc == EXIT_OK and "k=1" in out


def test_distance_toy_with_dstar(capsys, toy_files):
    rc, out, _ = run(capsys, ["distance", *toy_args(toy_files), "--cap", "3", "--dstar", "exhaustive"])
    assert rc == EXIT_OK
    assert "d = 2, witness: X on A[0,0,0], X on D[0,0,0]" in out
    assert "d* 2, sandwich: 2 <= 2 <= 3 ok" in out


def test_distance_budget_exit(capsys):
    rc, out, err = run(capsys, ["distance", "--3dxyz", "5", "5", "7", "--cap", "4", "--budget", "100"])
    assert rc == EXIT_BUDGET
    assert "budget exceeded" in out + err


def test_css_toy(capsys, toy_files):
    rc, out, _ = run(capsys, ["css", *toy_args(toy_files), "--cap", "6"])
    assert rc == EXIT_OK
    assert "n = 16, k = 2" in out and "d = 4" in out


def test_barrier_compare(capsys):
    rc, out, _ = run(capsys, ["barrier", "3", "4", "--compare", "2x3", "4x5"])
    assert rc == EXIT_OK
    assert "max = 4, constant across sizes: yes" in out


def test_fractal(capsys, tmp_path):
    spec = tmp_path / "f.txt"
    spec.write_text("29 31 5\nP1: 0,1,-1\nP2: 0,1,-1\nP3: 0,1,-1\n")
    rc, out, _ = run(capsys, ["fractal", str(spec), "3"])
    assert rc == EXIT_OK
    assert out.count("<= 4") == 3


def test_json_report_is_deterministic(capsys, tmp_path, toy_files):
    outs = []
    for i in range(2):
        path = tmp_path / f"r{i}.json"
        rc, _, _ = run(capsys, ["distance", *toy_args(toy_files), "--cap", "2", "--dstar", "greedy",
                                "--seed", "5", "--json", str(path), "--workers", str(i + 1)])
        assert rc == EXIT_OK
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    data = json.loads(outs[0])
    assert data["seed"] == 5 and data["cap"] == 2 and data["version"]
    assert set(data["report"]["inputs"]["sha256"]) == {"h1", "h2", "h3"}
    assert data["report"]["distance"]["exact_d"] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "xyzcode", "dim", "--chamon", "2", "2", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "k=8" in proc.stdout
