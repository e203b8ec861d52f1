import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brace_forge import braces as br
from brace_forge import rota_baxter as rb
from brace_forge import serialize as sz
from brace_forge import ybe
from brace_forge.catalog import get_group
from brace_forge.errors import ValidationError
from brace_forge.multibrace import build_multibrace
from brace_forge.rb_algebra import enumerate_algebra_rb


def roundtrip(to, frm, obj):
    return frm(json.loads(sz.dumps(to(obj))))


@pytest.mark.parametrize("name", ["C1", "S3", "Q8", "C2xC2xC3", "A4"])
def test_group_roundtrip(name):
    G = get_group(name)
    H = roundtrip(sz.group_to_json, sz.group_from_json, G)
    assert H == G and H.labels == G.labels and H.name == G.name


def test_operator_roundtrip(B1):
    assert roundtrip(sz.operator_to_json, sz.operator_from_json, B1) == B1
    C = rb.transform_rb(B1, "weight_swap")
    assert roundtrip(sz.operator_to_json, sz.operator_from_json, C) == C


def test_operator_image_out_of_range(B1):
    d = sz.operator_to_json(B1)
    d["images"][2] = 6
    with pytest.raises(ValidationError, match="out of range"):
        sz.operator_from_json(d)
    d["images"] = [0, 1]
    with pytest.raises(ValidationError):
        sz.operator_from_json(d)


def test_matrix_roundtrip():
    for m in enumerate_algebra_rb(3):
        assert roundtrip(sz.matrix_to_json, sz.matrix_from_json, m).flat() == m.flat()
    with pytest.raises(ValidationError):
        sz.matrix_from_json({"n": 1, "r": [[2]]})


def test_brace_roundtrip(B2):
    A = br.brace_from_rb(B2)
    assert roundtrip(sz.brace_to_json, sz.brace_from_json, A) == A


def test_brace_load_rejects_axiom_violation(S3):
    d = {"order": 6, "add": S3.table.tolist(), "circ": get_group("C6").table.tolist()}
    with pytest.raises(ValidationError, match=r"\(\d+, \d+, \d+\)"):
        sz.brace_from_json(d)


def test_brace_load_rejects_non_group():
    t = [[0, 1], [1, 1]]
    with pytest.raises(ValidationError):
        sz.brace_from_json({"add": t, "circ": t})


def test_solution_rack_multibrace_roundtrip(S3, B1):
    S = ybe.solution_from_rb(B1)
    assert roundtrip(sz.solution_to_json, sz.solution_from_json, S) == S
    R = ybe.conj_quandle(S3)
    assert np.array_equal(roundtrip(sz.rack_to_json, sz.rack_from_json, R).table, R.table)
    M = build_multibrace(B1, 3)
    assert roundtrip(sz.multibrace_to_json, sz.multibrace_from_json, M) == M


def test_schema_errors():
    with pytest.raises(ValidationError, match="missing"):
        sz.group_from_json({"name": "x"})
    with pytest.raises(ValidationError):
        sz.group_from_json([1, 2])
    with pytest.raises(ValidationError, match="order"):
        sz.group_from_json({"order": 3, "table": [[0, 1], [1, 0]]})
    with pytest.raises(ValidationError):
        sz.solution_from_json({"pairs": "abc"})


def test_load_file_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ValidationError, match="malformed"):
        sz.load_file(str(bad))
    with pytest.raises(ValidationError, match="cannot read"):
        sz.load_file(str(tmp_path / "missing.json"))


def test_dumps_keeps_rows_on_one_line(S3):
    text = sz.dumps(sz.group_to_json(S3))
    assert "[0, 1, 2, 3, 4, 5]" in text
    assert json.loads(text)["table"] == S3.table.tolist()


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["S3", "D4", "Q8", "C2xC4", "C6"]), st.data())
def test_operator_roundtrip_property(name, data):
    G = get_group(name)
    ops = rb.enumerate_rb_operators(G)
    op = ops[data.draw(st.integers(0, len(ops) - 1))]
    back = roundtrip(sz.operator_to_json, sz.operator_from_json, op)
    assert back == op and rb.is_rb_operator(G, back.images)
