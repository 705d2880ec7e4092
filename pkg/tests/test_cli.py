import json
import subprocess
import sys
from pathlib import Path

import pytest

from stratset.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_summary(capsys):
    code, out, _ = run(capsys, "build", "deltat 2")
    assert code == 0
    assert json.loads(out) == {"name": "deltat 2", "cells": 7, "counts": [3, 3, 1], "marked_counts": [0, 0, 1]}


def test_build_json_file(capsys, tmp_path):
    dest = tmp_path / "obj.json"
    code, _, _ = run(capsys, "build", "horn(2,1)", "--json", str(dest))
    data = json.loads(dest.read_text())
    assert code == 0 and data["dims"] == [3, 2] and data["marked"] == []


def test_marks_lists_the_cleaved_triangle(capsys):
    code, out, _ = run(capsys, "marks", "tensor(deltat 2, delta 1)", "--dim", "2")
    lines = out.splitlines()
    assert code == 0
    assert "2 [(0,0),(1,1),(2,1)]" in lines
    assert "2 [(0,0),(1,0),(2,1)]" not in lines
    assert len(lines) == 6


def test_check_exit_codes(capsys):
    code, out, _ = run(capsys, "check", "delta 1", "--complicial", "3")
    assert code == 0 and json.loads(out)["passed"]
    code, out, _ = run(capsys, "check", "delta3sharp", "--complicial", "2")
    assert code == 1 and not json.loads(out)["passed"]
    code, out, _ = run(capsys, "check", "delta 1", "--n-complicial", "0", "2")
    assert code == 1


def test_verify_filtration_golden(capsys):
    code, out, _ = run(capsys, "verify", "filtration", "-1", "0")
    assert code == 0
    assert out == (GOLDEN / "filtration_-1_0.json").read_text()
    assert json.loads(out)["total_added"] == 4


def test_verify_dump(capsys, tmp_path):
    dest = tmp_path / "cert.json"
    run(capsys, "verify", "filtration", "0", "1", "--dump", str(dest))
    assert "attaching_maps" in json.loads(dest.read_text())["stages"][1]


def test_verify_triviality_and_remark(capsys):
    assert run(capsys, "verify", "triviality", "2", "1", "1")[0] == 0
    code, out, _ = run(capsys, "verify", "remark", "0", "1")
    assert code == 0 and json.loads(out)["passed"]


def test_diagram_golden(capsys):
    code, out, _ = run(capsys, "diagram", "prod(delta 3, delta 2)", "--simplex", "0,1,2,3,3,3/0,0,0,0,1,2")
    assert code == 0 and out == (GOLDEN / "diagram_pi32.txt").read_text()
    code, out, _ = run(
        capsys, "diagram", "prod(delta 3, delta 2)", "--simplex", "0,1,2,3,3,3/0,0,0,0,1,2", "--format", "svg"
    )
    assert out == (GOLDEN / "diagram_pi32.svg").read_text()


@pytest.mark.parametrize(
    "argv,kind",
    [
        (["build", "horn(2,5)"], "range"),
        (["build", "tensor(delta 1"], "syntax"),
        (["frobnicate"], "usage"),
        (["verify", "filtration", "1"], "usage"),
        (["verify", "filtration", "-3", "0"], "range"),
        (["verify", "suites", "nonsense"], "usage"),
        (["diagram", "delta 2", "--simplex", "0"], "input"),
        (["marks", "delta 2", "--dim", "0"], "range"),
    ],
)
def test_errors_are_json_with_exit_2(capsys, argv, kind):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    assert json.loads(err)["error"] == kind


def test_range_error_has_position(capsys):
    _, _, err = run(capsys, "build", "horn(2,5)")
    data = json.loads(err)
    assert data["position"] == 7 and "0<=k<=m" in data["message"]


def test_module_entry_point_is_byte_stable():
    cmd = [sys.executable, "-m", "stratset", "marks", "tensor(deltat 2, delta 1)"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True, env={"PYTHONHASHSEED": "123", "PATH": ""}).stdout
    assert a == b and a
