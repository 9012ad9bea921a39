import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from bielliptic import __version__
from bielliptic.cli import SCHEMA, emit_table, format_row, parse_partition, run
from bielliptic.getzler import euler_Bn
from bielliptic.motives import MotiveClass
from bielliptic.weylchars import VirtualSp4Class
from bielliptic.wreath import WreathClass

GOLDEN = Path(__file__).parent / "golden"


def run_json(*argv):
    status, out = run(list(argv) + ["--format", "json"])
    assert status == 0, out
    record = json.loads(out)
    assert record["schema"] == SCHEMA
    assert record["version"] == __version__
    assert record["command"] == argv[0]
    return record


def test_table_golden():
    assert emit_table(range(5)) == (GOLDEN / "table_0_4.txt").read_text()
    status, out = run(["euler", "--n", "0-4"])
    assert status == 0 and out == (GOLDEN / "table_0_4.txt").read_text()


def test_emit_table_edge_cases():
    assert emit_table([]) == ""
    assert emit_table([6], (1,) * 6) == "S[2,8] - L^4 + 3L + 5\n"


def test_latex_row():
    assert run(["euler", "--n", "0", "--format", "latex"]) == (0, "$\\mathbf{L}^2-\\mathbf{L}$\n")
    row = format_row(euler_Bn(2), "latex")
    assert row.startswith("$(") and "s_{11}$" in row


@pytest.mark.parametrize("text,lam", [("1^6", (1,) * 6), ("111111", (1,) * 6),
                                      ("3,2,1", (3, 2, 1)), ("()", ()), ("2^2", (2, 2))])
def test_parse_partition(text, lam):
    assert parse_partition(text) == lam


def test_euler_partition_filter():
    assert run(["euler", "--n", "6", "--partition", "1^6"]) == (0, "S[2,8] - L^4 + 3L + 5\n")
    record = run_json("euler", "--n", "3")
    (row,) = record["result"]["rows"]
    parsed = {tuple(c["partition"]): MotiveClass.from_json(c["class"]) for c in row["coefficients"]}
    assert parsed == euler_Bn(3)


def test_branch_json():
    record = run_json("branch", "--l", "1", "--m", "1")
    assert record["result"]["terms"] == [{"label": "U0-", "twist": 0}, {"label": "U1-", "twist": 0}]
    record = run_json("branch", "--l", "2", "--m", "1", "--twisted")
    terms = sorted((t["label"], t["twist"]) for t in record["result"]["terms"])
    assert terms == [("U1,0", 1), ("U2,1", 0)]
    record = run_json("branch", "--wreath", "U2+")
    assert [t["label"] for t in record["result"]["terms"]] == ["V4+", "V2-", "V0+"]


def test_dims_json():
    result = run_json("dims", "--group", "G(2)", "--weight", "12")["result"]
    assert result["cusp"] == 4
    assert result["s3_multiplicities"] == {"s3": 1, "s21": 1, "s111": 1}
    assert run_json("dims", "--group", "G0(2)", "--weight", "8")["result"]["new"] == 1


def test_ec_json_round_trips():
    result = run_json("ec", "--space", "e2", "--system", "U6+")["result"]
    assert str(MotiveClass.from_json(result["class"])) == "S[2,8] + L^7"
    result = run_json("ec", "--space", "m", "--system", "W1,1")["result"]
    assert result["text"] == "L"
    result = run_json("ec", "--space", "a1", "--system", "V10")["result"]
    assert result["text"] == "-S[1,12] - 1"
    result = run_json("ec", "--space", "y2", "--system", "V0")["result"]
    assert MotiveClass.from_json(result["euler"]["s21"]) == MotiveClass.const(-1)


def test_payload_types_round_trip():
    from bielliptic.weylchars import W
    from bielliptic.wreath import U
    v = W(2, 1, 1) - W(0, 0) * 3
    assert VirtualSp4Class.from_json(json.loads(json.dumps(v.to_json()))) == v
    w = U(2, 1) - U(3, 3, 2)
    assert WreathClass.from_json(json.loads(json.dumps(w.to_json()))) == w


def test_verify_command():
    status, out = run(["verify", "sl2", "--d", "7"])
    assert status == 0
    assert all(line.startswith("PASS") for line in out.splitlines())
    record = run_json("verify", "--suite", "dims")
    assert record["result"]["passed"] is True


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["euler", "--n", "99"],
    ["euler", "--n", "3", "--partition", "22"],
    ["branch", "--l", "1", "--m", "2"],
    ["branch"],
    ["dims", "--group", "G0(3)", "--weight", "8"],
    ["verify", "nosuch"],
    ["ec", "--space", "m", "--system", "nonsense"],
])
def test_usage_errors(argv):
    assert run(argv)[0] == 2


def test_out_file_and_determinism(tmp_path):
    target = tmp_path / "row.json"
    status, out = run(["euler", "--n", "2", "--format", "json", "--out", str(target)])
    assert status == 0 and out == ""
    first = target.read_text()
    run(["euler", "--n", "2", "--format", "json", "--out", str(target)])
    assert target.read_text() == first
    assert "timing_s" not in json.loads(first)
    assert "timing_s" in json.loads(run(["euler", "--n", "1", "--format", "json", "--timing"])[1])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bielliptic", "euler", "--n", "1"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "(L^3 - L)s1\n"


def test_environment_bound():
    env = dict(os.environ, BIELLIPTIC_MAX_N="2")
    proc = subprocess.run([sys.executable, "-m", "bielliptic", "euler", "--n", "3"],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 2
