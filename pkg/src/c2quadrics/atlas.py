"""Versioned JSON persistence: elements, presentation decks, atlases.

The atlas document is deterministic (sorted keys, canonical ordering) so
repeated emission is byte-identical, and it is schema-versioned so stale
documents are rejected loudly.
"""

from __future__ import annotations

import json

from .coefficients import PointElt
from .grading import Grading
from .rewrite import RingElement

SCHEMA = "c2quadrics.atlas/1"


class SchemaError(ValueError):
    pass


def element_to_doc(x):
    doc = {"level": x.level}
    if x.c2:
        doc["c2"] = [
            {"mono": list(m), "coeff": v.to_json()} for m, v in sorted(x.c2.items())
        ]
    if x.atoms:
        doc["atoms"] = [
            {"iota": a, "zeta": b, "coeff": v} for (a, b), v in sorted(x.atoms.items())
        ]
    if x.e:
        doc["e"] = [
            {"key": list(k), "coeff": v} for k, v in sorted(x.e.items())
        ]
    return doc


def element_from_doc(pres, doc):
    x = RingElement(pres, doc["level"])
    for row in doc.get("c2", []):
        x = x + RingElement(
            pres, "top", c2={tuple(row["mono"]): PointElt.from_json(row["coeff"])}
        )
    for row in doc.get("atoms", []):
        x = x + RingElement(pres, "top", atoms={(row["iota"], row["zeta"]): row["coeff"]})
    for row in doc.get("e", []):
        e = RingElement(pres, "e", e={tuple(row["key"]): row["coeff"]})
        x = e if not (x.c2 or x.atoms or x.e) and doc["level"] == "e" else x + e
    return pres.normal_form(x)


def generator_table(pres):
    from .grading import OMEGA0, OMEGA1, W, XW

    gens = [
        {"name": "z0", "grading": OMEGA0.to_json(), "level": "C2/C2", "divisibility": None},
        {"name": "z1", "grading": OMEGA1.to_json(), "level": "C2/C2", "divisibility": None},
        {"name": "cw", "grading": W.to_json(), "level": "C2/C2", "divisibility": None},
        {"name": "cx", "grading": XW.to_json(), "level": "C2/C2", "divisibility": None},
    ]
    if pres.has_x:
        gens.append(
            {
                "name": "x",
                "grading": pres.x_grading.to_json(),
                "level": "C2/C2",
                "divisibility": None,
            }
        )
        gens.append(
            {
                "name": "divw",
                "grading": (pres.p * Grading(0, 0, 1)).to_json(),
                "level": "C2/C2",
                "divisibility": "z0",
            }
        )
        gens.append(
            {
                "name": "divx",
                "grading": (pres.q * Grading(0, 0, 0, 1)).to_json(),
                "level": "C2/C2",
                "divisibility": "z1",
            }
        )
    if pres.has_atoms:
        gens.append(
            {
                "name": "y",
                "grading": Grading(pres.levele.y_degree()).to_json(),
                "level": "C2/e",
                "divisibility": "z0",
            }
        )
    return gens


def presentation_to_doc(pres):
    doc = {
        "space": pres.name,
        "generators": generator_table(pres),
        "rules": [name for name, _, _ in pres.rules],
        "relations": [
            {"name": name, "lhs": str(pres.normal_form(l)), "rhs": str(pres.normal_form(r))}
            for name, l, r in pres.identities()
        ],
        "levele_model": {"kind": pres.levele.kind, "size": pres.levele.size},
        "hom_tables": _hom_tables(pres),
        "warnings": list(pres.warnings),
    }
    return doc


def _hom_tables(pres):
    """Printable rho / eta images of the generators."""
    from .levele import levele_str

    tables = {}
    gens = ["z0", "z1", "cw", "cx"] + (["x"] if pres.has_x else [])
    try:
        tables["rho"] = {g: levele_str(pres.rho(pres.gen(g)).e) for g in gens}
    except Exception:
        return tables
    data = pres.eta_data or {}
    if data.get("eta0_cw") is None:
        return tables
    R0, R1 = data["R0"], data["R1"]
    eta0, eta1 = {}, {}
    for g in gens:
        e0, e1 = pres.eta(pres.gen(g))
        eta0[g] = R0.str_elt(e0)
        eta1[g] = R1.str_elt(e1)
    tables["eta0"] = eta0
    tables["eta1"] = eta1
    return tables


def atlas_document(space_ids, coset=0, window=((-16, 16), (-16, 16)), seed=0, audit=False):
    from .catalog import basis_slice, make_space
    from .solver import audit_full

    spaces = []
    for sid in sorted(space_ids):
        pres = make_space(sid)
        if hasattr(pres, "reduce"):  # nonequivariant oracle ring
            spaces.append({"space": sid, "kind": "nonequivariant", "basis": [
                {"key": list(k), "degree": d} for k, d in pres.basis()
            ]})
            continue
        entry = {
            "space": sid,
            "kind": "equivariant",
            "presentation": presentation_to_doc(pres),
            "basis": [
                {"grading": g.to_json(), "type": label}
                for g, label in basis_slice(pres, coset, window)
            ],
            "coset": coset,
            "window": [list(window[0]), list(window[1])],
        }
        if audit:
            rep = audit_full(pres, seed=seed, samples=40, probe_samples=60)
            entry["audit"] = {
                "ok": rep["ok"],
                "checks": {k: v["ok"] for k, v in sorted(rep["checks"].items())},
            }
        spaces.append(entry)
    return {"schema": SCHEMA, "seed": seed, "spaces": spaces}


def dump_atlas(doc):
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def load_atlas(text):
    doc = json.loads(text)
    if doc.get("schema") != SCHEMA:
        raise SchemaError(
            "schema mismatch: expected %r, found %r" % (SCHEMA, doc.get("schema"))
        )
    return doc
