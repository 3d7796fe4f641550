import csv
import io
import json
import subprocess
import sys

import pytest

from bigjacobi.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_values(capsys):
    assert run(capsys, "eval", "--alpha", "1", "--beta", "1", "--c", "1/2", "--n", "1", "--x", "0")[:2] == (0, "-1/4\n")
    assert run(capsys, "eval", "--n", "2", "--x", "1/2")[1] == "-5/12\n"
    assert run(capsys, "eval", "--alpha", "7/3", "--n", "0", "--x", "-9/2")[1] == "1\n"


def test_bad_rational_exits_2(capsys):
    code, _, err = run(capsys, "eval", "--alpha", "1/x", "--n", "1", "--x", "0")
    assert code == 2 and "position 2" in err


def test_negative_nmax_exits_2(capsys):
    assert run(capsys, "table", "--nmax", "-1")[0] == 2


def test_table_rows(capsys):
    code, out, _ = run(capsys, "table", "--nmax", "3")
    rows = json.loads(out)
    assert code == 0
    assert rows[0] == {"n": 0, "lambda": "0", "b": "1/4", "u": None, "nu": "0", "kappa": "-2", "coeffs": ["1"]}
    assert (rows[1]["lambda"], rows[1]["u"], rows[1]["nu"], rows[1]["kappa"]) == ("-8", "9/16", "3", "-6")


def test_table_csv_matches_json(capsys):
    _, js, _ = run(capsys, "table", "--nmax", "6", "--alpha", "5/2", "--c", "-1/3")
    _, cs, _ = run(capsys, "table", "--nmax", "6", "--alpha", "5/2", "--c", "-1/3", "--format", "csv")
    rows = json.loads(js)
    for row, line in zip(rows, csv.DictReader(io.StringIO(cs))):
        for key, value in row.items():
            if key == "coeffs":
                assert line[key].split(" ") == value
            else:
                assert line[key] == ("" if value is None else str(value))


def test_table_is_deterministic(tmp_path):
    outs = []
    for i in range(2):
        path = tmp_path / f"t{i}.csv"
        assert main(["table", "--nmax", "8", "--format", "csv", "--out", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_verify_base_point(capsys):
    code, out, _ = run(capsys, "verify", "--nmax", "10")
    report = json.loads(out)
    assert code == 0
    assert {r["identity"] for r in report} >= {"eigenvalue", "anticommutator_xy", "casimir", "double_christoffel"}
    assert all(r["residual_zero"] is not False for r in report)


def test_verify_little_branch(capsys):
    code, out, _ = run(capsys, "verify", "--c", "0", "--alpha", "3", "--nmax", "10")
    names = {r["identity"]: r["residual_zero"] for r in json.loads(out)}
    assert code == 0
    assert names["little_dunkl_reduction"] is True
    assert names["little_raising_reduction"] is True


def test_verify_degenerate_exits_2(capsys):
    code, _, err = run(capsys, "verify", "--alpha", "-1", "--beta", "-1")
    assert code == 2 and "DegenerateParams" in err


def test_verify_samples_are_reproducible(capsys):
    first = run(capsys, "verify", "--nmax", "4", "--samples", "3", "--seed", "11")
    second = run(capsys, "verify", "--nmax", "4", "--samples", "3", "--seed", "11")
    assert first == second
    sampled = [r for r in json.loads(first[1]) if "sample" in r]
    assert sampled and all(r["seed"] == 11 for r in sampled)


def test_ladder(capsys):
    code, out, _ = run(capsys, "ladder", "--alpha", "3", "--c", "1/3", "--nmax", "4")
    reports = json.loads(out)
    assert code == 0
    assert {r["shift"] for r in reports} == {2, -2}
    assert all(r["exact_match"] for r in reports)


def test_christoffel_from_file(capsys, tmp_path):
    _, table, _ = run(capsys, "table", "--nmax", "8")
    src = tmp_path / "seq.json"
    src.write_text(table, encoding="utf-8")
    code, out, _ = run(capsys, "christoffel", "--in", str(src), "--nmax", "4")
    assert code == 0
    _, target, _ = run(capsys, "table", "--alpha", "3", "--nmax", "4")
    got = json.loads(out)
    want = json.loads(target)
    assert [r["coeffs"] for r in got] == [r["coeffs"] for r in want]
    assert [r["b"] for r in got] == [r["b"] for r in want]
    assert [r["u"] for r in got] == [r["u"] for r in want]


def test_christoffel_short_input_exits_2(capsys, tmp_path):
    _, table, _ = run(capsys, "table", "--nmax", "3")
    src = tmp_path / "seq.json"
    src.write_text(table, encoding="utf-8")
    assert run(capsys, "christoffel", "--in", str(src), "--nmax", "4")[0] == 2


def test_christoffel_zero_node_exits_2(capsys):
    assert run(capsys, "christoffel", "--at", "1/4", "--nmax", "3")[0] == 2


def test_quad_outputs(capsys):
    code, out, _ = run(capsys, "quad", "--points", "5")
    obj = json.loads(out)
    assert code == 0 and len(obj["nodes"]) == 5 and obj["mass"] == 0.375
    code, out, _ = run(capsys, "quad", "--points", "5", "--format", "csv", "--digits", "6")
    lines = out.strip().splitlines()
    assert lines[0] == "node,weight" and len(lines) == 6


def test_quad_outside_window_exits_2(capsys):
    assert run(capsys, "quad", "--c", "3/2")[0] == 2


@pytest.mark.parametrize("argv", [["--help"], []])
def test_console_script(argv):
    proc = subprocess.run([sys.executable, "-m", "bigjacobi.cli", *argv], capture_output=True, text=True)
    assert proc.returncode == (0 if argv else 2)
