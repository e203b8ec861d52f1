"""Named finite groups used by the CLI and the sweeps.

Base entries plus every direct product of entries of total order at most 12.
``BRACE_FORGE_CATALOG`` may point at a JSON file mapping names to constructor
descriptors (``"direct_product(cyclic(2),cyclic(5))"``) or to group JSON objects;
it replaces the built-in catalog.
"""

from __future__ import annotations

import json
import os
from functools import lru_cache
from typing import Callable

from .errors import ValidationError
from .groups import (FiniteGroup, alternating, build_group, cyclic, dihedral, direct_product,
                     quaternion8, symmetric)

MAX_PRODUCT_ORDER = 12
ENV_VAR = "BRACE_FORGE_CATALOG"
ALIASES = {"C2^2": "C2xC2", "C2^3": "C2xC2xC2", "V4": "C2xC2"}


def _base() -> dict[str, tuple[int, Callable[[], FiniteGroup]]]:
    base: dict[str, tuple[int, Callable[[], FiniteGroup]]] = {}
    for n in range(1, 13):
        base[f"C{n}"] = (n, lambda n=n: cyclic(n))
    for n in range(3, 7):
        base[f"D{n}"] = (2 * n, lambda n=n: dihedral(n))
    base["S3"] = (6, lambda: symmetric(3))
    base["S4"] = (24, lambda: symmetric(4))
    base["Q8"] = (8, quaternion8)
    base["A4"] = (12, lambda: alternating(4))
    base["C2xC2"] = (4, lambda: direct_product(cyclic(2), cyclic(2), "C2xC2"))
    base["C2xC4"] = (8, lambda: direct_product(cyclic(2), cyclic(4), "C2xC4"))
    return base


def _factor_key(name: str):
    return (name[0], int(name[1:]) if name[1:].isdigit() else 0, name)


def _product_name(a: str, b: str) -> str:
    return "x".join(sorted(a.split("x") + b.split("x"), key=_factor_key))


@lru_cache(maxsize=1)
def _builtin() -> dict[str, tuple[int, Callable[[], FiniteGroup]]]:
    entries = _base()
    base = {k: v for k, v in entries.items() if v[0] > 1}
    frontier = dict(base)
    while frontier:
        new = {}
        for a, (na, fa) in frontier.items():
            for b, (nb, fb) in base.items():
                if na * nb > MAX_PRODUCT_ORDER:
                    continue
                name = _product_name(a, b)
                if name in entries or name in new:
                    continue
                new[name] = (na * nb, lambda fa=fa, fb=fb, name=name: direct_product(fa(), fb(), name))
        entries.update(new)
        frontier = new
    return entries


def _from_file(path: str) -> dict[str, tuple[int, Callable[[], FiniteGroup]]]:
    from .serialize import group_from_json

    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(f"cannot read catalog {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ValidationError("catalog file must hold a JSON object")
    out = {}
    for name, descriptor in data.items():
        if isinstance(descriptor, str):
            g = build_group(descriptor)
        else:
            g = group_from_json(descriptor)
        g.name = name
        out[name] = (g.order, lambda g=g: g)
    return out


def _entries():
    path = os.environ.get(ENV_VAR)
    return _from_file(path) if path else _builtin()


def catalog_names(max_order: int | None = None) -> list[str]:
    items = _entries().items()
    names = [k for k, (n, _) in items if max_order is None or n <= max_order]
    return sorted(names, key=lambda k: (_entries()[k][0], k))


def catalog_order(name: str) -> int:
    return _entries()[ALIASES.get(name, name)][0]


@lru_cache(maxsize=None)
def _built(name: str, source: str | None) -> FiniteGroup:
    return _entries()[name][1]()


def get_group(name: str) -> FiniteGroup:
    """Catalog lookup; unknown names are parsed as constructor descriptors."""
    key = ALIASES.get(name, name)
    entries = _entries()
    if key in entries:
        G = _built(key, os.environ.get(ENV_VAR))
        G.name = key
        return G
    try:
        return build_group(name)
    except Exception as exc:
        raise ValidationError(f"unknown group {name!r}") from exc


def catalog_groups(max_order: int | None = None) -> list[FiniteGroup]:
    return [get_group(n) for n in catalog_names(max_order)]
