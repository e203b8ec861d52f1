import json

import pytest

from brace_forge import catalog
from brace_forge.errors import ValidationError
from brace_forge.groups import isomorphic, verify_group_table


def test_catalog_contents():
    names = catalog.catalog_names()
    for required in ("C1", "C12", "D3", "D6", "S3", "S4", "Q8", "A4", "C2xC2", "C2xC4",
                     "C2xC2xC2", "C2xC6", "C2xC2xC3"):
        assert required in names
    assert len(names) == len(set(names))
    assert all(catalog.catalog_order(n) <= 12 or n == "S4" for n in names)


def test_catalog_groups_validate():
    for n in catalog.catalog_names():
        G = catalog.get_group(n)
        assert verify_group_table(G.table) and G.order == catalog.catalog_order(n)


def test_aliases_and_descriptors():
    assert catalog.get_group("V4") == catalog.get_group("C2xC2")
    G = catalog.get_group("direct_product(cyclic(2),cyclic(5))")
    assert isomorphic(G, catalog.get_group("C10")) is not None
    with pytest.raises(ValidationError):
        catalog.get_group("nonsense")


def test_catalog_env_override(tmp_path, monkeypatch):
    f = tmp_path / "cat.json"
    f.write_text(json.dumps({"Z5": "cyclic(5)",
                             "K": {"table": [[0, 1], [1, 0]], "labels": ["e", "k"]}}))
    monkeypatch.setenv(catalog.ENV_VAR, str(f))
    assert catalog.catalog_names() == ["K", "Z5"]
    assert catalog.get_group("Z5").order == 5
    assert catalog.get_group("K").labels == ["e", "k"]


def test_catalog_env_bad_file(tmp_path, monkeypatch):
    f = tmp_path / "cat.json"
    f.write_text("[1, 2]")
    monkeypatch.setenv(catalog.ENV_VAR, str(f))
    with pytest.raises(ValidationError):
        catalog.catalog_names()
