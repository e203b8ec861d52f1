"""JSON round-trips for every domain object.  Loading re-validates structure."""

from __future__ import annotations

import json
import re
from typing import Any

import numpy as np

from .braces import SkewBrace
from .errors import ValidationError
from .groups import FiniteGroup
from .multibrace import MultiBrace
from .rb_algebra import RbMatrix
from .rota_baxter import RbOperator
from .ybe import Rack, YbeSolution


def _ints(a) -> list:
    return np.asarray(a).tolist()


def _require(d: Any, keys: tuple[str, ...], what: str) -> dict:
    if not isinstance(d, dict):
        raise ValidationError(f"{what} JSON must be an object")
    missing = [k for k in keys if k not in d]
    if missing:
        raise ValidationError(f"{what} JSON missing keys: {', '.join(missing)}")
    return d


def _check_order(d: dict, n: int, what: str):
    if d.get("order", n) != n:
        raise ValidationError(f"{what} JSON: order {d['order']} does not match table size {n}")


def _array(x, what: str) -> np.ndarray:
    try:
        arr = np.asarray(x, dtype=np.int64)
    except (TypeError, ValueError, OverflowError) as exc:
        raise ValidationError(f"{what}: expected an integer array") from exc
    return arr


# groups

def group_to_json(G: FiniteGroup) -> dict:
    return {"name": G.name, "order": G.order, "table": _ints(G.table), "labels": list(G.labels)}


def group_from_json(d: dict) -> FiniteGroup:
    _require(d, ("table",), "group")
    t = _array(d["table"], "group table")
    if t.ndim != 2:
        raise ValidationError("group table must be two-dimensional")
    _check_order(d, t.shape[0], "group")
    return FiniteGroup(t, d.get("labels"), d.get("name", "G"))


# operators

def operator_to_json(op: RbOperator) -> dict:
    return {"group": group_to_json(op.group), "weight": op.weight, "images": _ints(op.images)}


def operator_from_json(d: dict, group: FiniteGroup | None = None) -> RbOperator:
    """Structural load (range and length); the RB identity is checked by callers."""
    _require(d, ("images",), "operator")
    G = group if group is not None else group_from_json(_require(d, ("group",), "operator")["group"])
    imgs = _array(d["images"], "operator images")
    if imgs.shape != (G.order,):
        raise ValidationError(f"operator has {imgs.size} images for a group of order {G.order}")
    if imgs.min() < 0 or imgs.max() >= G.order:
        raise ValidationError("operator image out of range")
    w = d.get("weight", 1)
    if w not in (1, -1):
        raise ValidationError("operator weight must be 1 or -1")
    return RbOperator(G, imgs, w)


# algebra matrices

def matrix_to_json(m: RbMatrix) -> dict:
    return {"n": m.n, "r": [list(row) for row in m.r]}


def matrix_from_json(d: dict) -> RbMatrix:
    _require(d, ("r",), "matrix")
    m = RbMatrix(_array(d["r"], "matrix"))
    if d.get("n", m.n) != m.n:
        raise ValidationError("matrix JSON: n does not match")
    return m


# braces

def brace_to_json(A: SkewBrace) -> dict:
    return {"order": A.order, "add": _ints(A.add_table), "circ": _ints(A.circ_table),
            "labels": list(A.labels)}


def brace_from_json(d: dict) -> SkewBrace:
    _require(d, ("add", "circ"), "brace")
    add = _array(d["add"], "brace add table")
    circ = _array(d["circ"], "brace circ table")
    if add.ndim != 2 or add.shape != circ.shape:
        raise ValidationError("brace tables must be square and of equal size")
    _check_order(d, add.shape[0], "brace")
    return SkewBrace(add, circ, d.get("labels"), d.get("name", "A"))


# solutions and racks

def solution_to_json(S: YbeSolution) -> dict:
    return {"order": S.order, "pairs": _ints(S.pairs)}


def solution_from_json(d: dict) -> YbeSolution:
    _require(d, ("pairs",), "solution")
    S = YbeSolution(_array(d["pairs"], "solution pairs"))
    _check_order(d, S.order, "solution")
    return S


def rack_to_json(R: Rack) -> dict:
    return {"order": R.order, "table": _ints(R.table)}


def rack_from_json(d: dict) -> Rack:
    _require(d, ("table",), "rack")
    R = Rack(_array(d["table"], "rack table"))
    _check_order(d, R.order, "rack")
    return R


# multibraces

def multibrace_to_json(M: MultiBrace) -> dict:
    return {"order": M.order, "tables": [_ints(t) for t in M.tables]}


def multibrace_from_json(d: dict) -> MultiBrace:
    _require(d, ("tables",), "multibrace")
    tables = [_array(t, "multibrace table") for t in d["tables"]]
    if not tables or any(t.ndim != 2 for t in tables):
        raise ValidationError("multibrace tables must be square arrays")
    _check_order(d, tables[0].shape[0], "multibrace")
    return MultiBrace(tables)


_FLAT_LIST = re.compile(r"\[\s+([^\[\]{}]*?)\s+\]")


def dumps(obj: Any) -> str:
    """Indented JSON with innermost scalar lists kept on one line."""
    text = json.dumps(obj, indent=2, ensure_ascii=False)
    return _FLAT_LIST.sub(lambda m: "[" + re.sub(r",\s+", ", ", m.group(1)) + "]", text)


def load_file(path: str) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON in {path}: {exc}") from exc
