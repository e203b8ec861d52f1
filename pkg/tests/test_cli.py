import json

import numpy as np
import pytest

from brace_forge import serialize as sz
from brace_forge import ybe
from brace_forge.cli import run_command
from brace_forge.repro import TARGETS


def run(argv, capsys):
    code = run_command(argv)
    out, err = capsys.readouterr()
    return code, out, err


def run_json(argv, capsys):
    code, out, err = run(argv, capsys)
    return code, json.loads(out) if out.strip() else None


def write(path, obj):
    path.write_text(sz.dumps(obj))
    return str(path)


SMOKE = [
    ["group", "build", "--group", "direct_product(cyclic(2),cyclic(3))"],
    ["group", "info", "--group", "S3"],
    ["group", "list", "--max-order", "6"],
    ["rb", "enumerate", "--group", "S3"],
    ["rb", "verify", "--group", "S3", "--index", "2"],
    ["rb", "transform", "--group", "S3", "--index", "2", "--kind", "tilde"],
    ["rb", "transform", "--group", "S3", "--index", "2", "--kind", "aut", "--aut", "1"],
    ["rb", "transform", "--group", "S3", "--index", "2", "--kind", "swap"],
    ["rb", "construct", "--group", "S3", "--kind", "splitting", "--H", "(2 3)", "--L", "(1 2 3)"],
    ["rb", "construct", "--group", "Q8", "--kind", "inversion"],
    ["rb", "classify", "--group", "D4", "--merge-tilde"],
    ["rb", "derive", "--group", "S3", "--index", "5"],
    ["algebra", "enumerate", "--n", "2"],
    ["algebra", "orbits", "--n", "3"],
    ["algebra", "lift", "--group", "S3", "--matrix", "[[-1,-1],[0,-1]]"],
    ["brace", "from-rb", "--group", "S3", "--index", "5"],
    ["brace", "invariants", "--group", "D4", "--index", "7"],
    ["brace", "enumerate", "--group", "S3", "--dedupe"],
    ["brace", "quotient", "--group", "S3", "--index", "0", "--ideal", "e;(1 2 3);(1 3 2)"],
    ["brace", "semidirect", "--a", "C3", "--b", "C2"],
    ["embed", "tilde", "--group", "S3", "--index", "5"],
    ["embed", "zeta", "--group", "D4", "--index", "0"],
    ["embed", "recover", "--group", "S3", "--index", "5"],
    ["ybe", "from-brace", "--group", "S3", "--index", "5"],
    ["ybe", "from-rb", "--group", "S3", "--index", "5"],
    ["ybe", "direct-rb", "--group", "C4", "--index", "0"],
    ["ybe", "rack-sweep", "--n", "3"],
    ["multibrace", "build", "--group", "S3", "--index", "5", "--k", "3"],
    ["paper", "repro", "--example", "s3-b1"],
    ["paper", "repro", "--example", "colazzo"],
]


@pytest.mark.parametrize("argv", SMOKE, ids=[" ".join(a[:2]) for a in SMOKE])
def test_commands_succeed(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 0, err
    json.loads(out)


def test_rb_enumerate_report(capsys):
    code, rep = run_json(["rb", "enumerate", "--group", "S3"], capsys)
    assert code == 0 and rep["count"] == 8 and len(rep["operators"]) == 8


def test_text_format_is_aligned(capsys):
    code, out, _ = run(["group", "info", "--group", "S3", "--format", "text"], capsys)
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("name")
    col = lines[0].index("S3")
    assert lines[1][col:].startswith("6")


def test_global_flags_before_or_after(capsys):
    a = run(["--format", "text", "group", "info", "--group", "C4"], capsys)
    b = run(["group", "info", "--group", "C4", "--format", "text"], capsys)
    assert a == b and a[0] == 0


def test_determinism(capsys):
    argv = ["brace", "enumerate", "--group", "D4", "--jobs", "2"]
    assert run(argv, capsys)[1] == run(argv, capsys)[1]
    argv = ["ybe", "rack-sweep", "--n", "4", "--sample", "50", "--seed", "3"]
    assert run(argv, capsys)[1] == run(argv, capsys)[1]


def test_out_file(tmp_path, capsys):
    dest = tmp_path / "s3.json"
    code, _, _ = run(["group", "build", "--group", "S3", "--out", str(dest)], capsys)
    assert code == 0
    assert sz.group_from_json(json.loads(dest.read_text())).order == 6


def test_file_round_trip_through_commands(tmp_path, capsys):
    b = tmp_path / "b.json"
    assert run(["brace", "from-rb", "--group", "S3", "--index", "5", "--out", str(b)], capsys)[0] == 0
    code, rep = run_json(["brace", "verify", "--in", str(b)], capsys)
    assert code == 0 and rep["left"]["ok"]
    code, rep = run_json(["brace", "isomorphic", "--in", str(b), "--other", str(b)], capsys)
    assert code == 0
    s = tmp_path / "s.json"
    assert run(["ybe", "from-brace", "--in", str(b), "--out", str(s)], capsys)[0] == 0
    assert run(["ybe", "verify", "--in", str(s)], capsys)[0] == 0
    assert run(["ybe", "rack-form", "--in", str(s)], capsys)[0] == 0
    assert run(["embed", "verify", "--in", str(b)], capsys)[0] in (0, 1)
    m = tmp_path / "m.json"
    assert run(["multibrace", "build", "--group", "S3", "--index", "5", "--k", "2",
                "--out", str(m)], capsys)[0] == 0
    assert run(["multibrace", "verify", "--in", str(m)], capsys)[0] == 0
    op = tmp_path / "op.json"
    assert run(["rb", "construct", "--group", "S3", "--kind", "trivial", "--out", str(op)], capsys)[0] == 0
    assert run(["rb", "verify", "--in", str(op)], capsys)[0] == 0


def test_from_rack_file(tmp_path, capsys):
    r = write(tmp_path / "r.json", sz.rack_to_json(ybe.shift_rack(4)))
    assert run(["ybe", "from-rack", "--in", r], capsys)[0] == 0


def test_bad_solution_exits_1_with_witness(tmp_path, capsys):
    p = np.array([[((x + 1) % 3, y) for y in range(3)] for x in range(3)])
    f = write(tmp_path / "bad.json", sz.solution_to_json(ybe.YbeSolution(p)))
    code, rep = run_json(["ybe", "verify", "--in", f], capsys)
    assert code == 1 and rep["braid"]["witness"] is not None


def test_invalid_direct_solution_exits_1(capsys):
    code, rep = run_json(["ybe", "direct-rb", "--group", "C4", "--index", "1"], capsys)
    assert code == 1


def test_non_rb_operator_exits_1(tmp_path, capsys):
    from brace_forge import symmetric
    from brace_forge.rota_baxter import RbOperator
    f = write(tmp_path / "op.json", sz.operator_to_json(RbOperator(symmetric(3), np.arange(6))))
    assert run(["rb", "verify", "--in", f], capsys)[0] == 1


def test_bad_brace_json_fails_check_and_load(tmp_path, capsys):
    from brace_forge import cyclic, symmetric
    f = write(tmp_path / "b.json", {"add": symmetric(3).table.tolist(),
                                    "circ": cyclic(6).table.tolist()})
    code, rep = run_json(["brace", "verify", "--in", f], capsys)
    assert code == 1 and rep["left"]["witness"] is not None
    code, _, err = run(["brace", "invariants", "--in", f], capsys)
    assert code == 2 and "fails" in err


def test_operator_out_of_range_exits_2(tmp_path, capsys):
    f = write(tmp_path / "op.json", {"group": "S3", "weight": 1, "images": [0, 9, 0, 0, 0, 0]})
    assert run(["rb", "verify", "--in", f], capsys)[0] == 2


@pytest.mark.parametrize("argv", [
    ["rb", "enumerate", "--group", "NOPE"],
    ["rb", "enumerate", "--group", "S4"],
    ["algebra", "enumerate", "--n", "9"],
    ["nonsense"],
    ["rb", "enumerate", "--group", "S3", "--jobs", "0"],
    ["algebra", "lift", "--group", "S3", "--matrix", "[[0,0],[1,0]]"],
    ["algebra", "lift", "--group", "S3", "--matrix", "not json"],
    ["paper", "repro", "--example", "unknown"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert run(argv, capsys)[0] == 2


def test_malformed_json_exits_2(tmp_path, capsys):
    f = tmp_path / "x.json"
    f.write_text("{oops")
    assert run(["ybe", "verify", "--in", str(f)], capsys)[0] == 2
    assert run(["brace", "verify", "--in", str(tmp_path / "missing.json")], capsys)[0] == 2


def test_every_repro_target_is_registered(capsys):
    code, rep = run_json(["paper", "repro", "--example", "multibrace-s3"], capsys)
    assert code == 0 and rep["ok"]
    assert {"s3-b1", "s3-b2", "multibrace-s3", "algebra-counts", "algebra-orbits",
            "algebra-oracle", "parity-window", "colazzo"} <= set(TARGETS)
