import json
import warnings

import pytest

from c2quadrics.atlas import (
    SCHEMA,
    SchemaError,
    atlas_document,
    dump_atlas,
    element_from_doc,
    element_to_doc,
    load_atlas,
)
from c2quadrics.catalog import RestrictedGradingWarning, _div_elements, make_quadric

warnings.simplefilter("ignore", RestrictedGradingWarning)


def test_element_round_trip():
    Q = make_quadric(5, 3)
    divw, _ = _div_elements(Q)
    x = Q.mul(divw, Q.monomial_elt((-1, 0, 0, 1, 0, 1, 0)))
    doc = element_to_doc(Q.normal_form(x))
    back = element_from_doc(Q, json.loads(json.dumps(doc)))
    assert (back - x).is_zero()


def test_levele_round_trip():
    Q = make_quadric(3, 3)
    v = Q.rho(Q.gen("x"))
    back = element_from_doc(Q, element_to_doc(v))
    assert (back - v).is_zero()


def test_atlas_deterministic():
    spaces = ["quadric:3,3", "quadric:4,4", "proj:1,1", "neq:5,B"]
    a = dump_atlas(atlas_document(spaces, seed=3))
    b = dump_atlas(atlas_document(list(reversed(spaces)), seed=3))
    assert a == b  # byte-identical given sorted keys and space ordering


def test_atlas_round_trip_and_schema():
    doc = atlas_document(["quadric:3,3"], seed=0)
    text = dump_atlas(doc)
    loaded = load_atlas(text)
    assert loaded["schema"] == SCHEMA
    assert dump_atlas(loaded) == text
    bad = json.loads(text)
    bad["schema"] = "c2quadrics.atlas/0"
    with pytest.raises(SchemaError):
        load_atlas(json.dumps(bad))


def test_presentation_doc_contents():
    doc = atlas_document(["quadric:5,3"], seed=0)["spaces"][0]
    gens = {g["name"]: g for g in doc["presentation"]["generators"]}
    assert gens["divw"]["divisibility"] == "z0"
    assert gens["divx"]["divisibility"] == "z1"
    assert gens["y"]["level"] == "C2/e"
    assert gens["x"]["grading"] == {"a": -2, "b": 0, "m": 3, "n": 0} or gens["x"][
        "grading"
    ]["n"] == 0
    names = [r["name"] for r in doc["presentation"]["relations"]]
    assert "x^2" in names and "divw*divx" in names
