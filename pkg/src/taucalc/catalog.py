"""Fact-file loading/saving and the bundled knot catalog.

Fact files are JSON documents with three arrays:

  knots:     [{"id": str, "presentations": [{"kind": str, "value": str}]}]
  facts:     [{"id": str, "kind": "g3"|"g4_upper"|"tb_lower"|"tau_lower"|
               "tau_upper", "value": int, "source": str}]
  relations: [{"kind": "mirror"|"sum"|"crossing_change"|"cobordism"|
               "unknotting"|"double", ...operand fields}]

The bundled catalog's braid words come from standard braid-word tables;
each is re-validated at load time against its expected strand and signed
crossing counts and the single-component closure check, so a corrupted
entry is a hard error, not a wrong answer.
"""

from __future__ import annotations

import json
from importlib import resources

from .braid import parse_braid
from .deduce import (
    Cobordism,
    CrossingChange,
    Double,
    FactBase,
    Mirror,
    Relation,
    Sum,
    Unknotting,
)
from .errors import CatalogError

_RELATION_TYPES = {
    "mirror": Mirror,
    "sum": Sum,
    "crossing_change": CrossingChange,
    "cobordism": Cobordism,
    "unknotting": Unknotting,
    "double": Double,
}

# Expected (strands, positive letters, negative letters) for the bundled
# braid words, as reported for these knots in genus tables.
_BRAID_SUMMARIES = {
    "unknot": (1, 0, 0),
    "trefoil": (2, 3, 0),
    "10_139": (3, 10, 0),
    "m10_152": (3, 10, 0),
    "m10_161": (3, 9, 1),
    "m10_145": (4, 9, 2),
}


def factbase_from_dict(doc: dict) -> FactBase:
    base = FactBase()
    for entry in doc.get("knots", ()):
        try:
            base = base.add_knot(entry["id"], entry.get("presentations", ()))
        except KeyError:
            raise CatalogError(f"knot entry missing 'id': {entry}") from None
    for fact in doc.get("facts", ()):
        base = base.add_fact(
            fact["id"], fact["kind"], fact["value"], fact.get("source", "")
        )
    for rel in doc.get("relations", ()):
        kind = rel.get("kind")
        if kind not in _RELATION_TYPES:
            raise CatalogError(f"unknown relation kind {kind!r}")
        fields = {k: v for k, v in rel.items() if k != "kind"}
        try:
            base = base.add_relation(_RELATION_TYPES[kind](**fields))
        except TypeError as e:
            raise CatalogError(f"bad {kind} relation {rel}: {e}") from None
    return base


def factbase_to_dict(base: FactBase) -> dict:
    knots = [
        {
            "id": id,
            "presentations": [
                {"kind": p.kind, "value": p.value} for p in rec.presentations
            ],
        }
        for id, rec in sorted(base.records.items())
    ]
    facts = [
        {"id": f.knot, "kind": f.kind, "value": f.value, "source": f.source}
        for f in base.facts
    ]
    relations = [_relation_to_dict(r) for r in base.relations]
    return {"knots": knots, "facts": facts, "relations": relations}


def _relation_to_dict(rel: Relation) -> dict:
    d = {"kind": rel.kind}
    for name in rel.__dataclass_fields__:
        if name != "kind":
            d[name] = getattr(rel, name)
    return d


def load_factbase(path: str) -> FactBase:
    """Load a fact file; errors carry the offending entry."""
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as e:
            raise CatalogError(f"{path}:{e.lineno}: {e.msg}") from None
    return factbase_from_dict(doc)


def save_factbase(base: FactBase, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(factbase_to_dict(base), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_bundled_catalog() -> FactBase:
    """The shipped catalog, revalidated against its braid-word summaries."""
    text = resources.files("taucalc").joinpath("data/catalog.json").read_text()
    doc = json.loads(text)
    base = factbase_from_dict(doc)
    for id, (n, kp, km) in _BRAID_SUMMARIES.items():
        words = [
            p for p in base.knot(id).presentations if p.kind == "braid"
        ]
        if not words:
            raise CatalogError(f"catalog entry {id} lost its braid word")
        b = parse_braid(words[0].value)
        if (b.strands, b.k_plus, b.k_minus) != (n, kp, km):
            raise CatalogError(
                f"catalog braid word for {id} has summary "
                f"{(b.strands, b.k_plus, b.k_minus)}, expected {(n, kp, km)}"
            )
    return base
