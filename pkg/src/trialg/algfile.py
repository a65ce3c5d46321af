"""Sparse text format for structure-constant algebras.

An algebra file is a JSON document with three members:

    {
      "field": "Q",                      // or "Fp:<prime>"
      "dim": 2,
      "products": [
        {"op": "vdash", "i": 0, "j": 0, "value": ["0", "1"]}
      ]
    }

Only nonzero products are listed; indices are 0-based; ``value`` is the
dense coordinate vector of e_i op e_j written as reduced fraction or
integer strings.  Duplicate (op, i, j) entries are rejected.  Emission is
canonical (operation order vdash/dashv/perp, then i, then j; zero entries
omitted), so parse(emit(x)) round-trips exactly.
"""

from __future__ import annotations

import json
from typing import Any

from .algebra import OPS, TriAlgebra
from .fields import parse_field

__all__ = ["AlgebraFileError", "algebra_to_dict", "algebra_from_dict", "emit", "parse", "load", "save"]


class AlgebraFileError(ValueError):
    pass


def algebra_to_dict(a: TriAlgebra) -> dict:
    entries = []
    for op in OPS:
        for (i, j) in sorted(a.products[op]):
            value = [a.field.to_str(x) for x in a.product(op, i, j)]
            entries.append({"op": op, "i": i, "j": j, "value": value})
    return {"field": a.field.name, "dim": a.dim, "products": entries}


def algebra_from_dict(doc: Any) -> TriAlgebra:
    if not isinstance(doc, dict):
        raise AlgebraFileError("document must be a JSON object")
    missing = {"field", "dim", "products"} - set(doc)
    if missing:
        raise AlgebraFileError(f"missing members: {sorted(missing)}")
    try:
        field = parse_field(doc["field"])
    except ValueError as exc:
        raise AlgebraFileError(f"bad field tag: {exc}") from None
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 0:
        raise AlgebraFileError(f"bad dim: {dim!r}")
    entries = doc["products"]
    if not isinstance(entries, list):
        raise AlgebraFileError("products must be a list")
    products: dict = {op: {} for op in OPS}
    seen = set()
    for pos, entry in enumerate(entries):
        where = f"products[{pos}]"
        if not isinstance(entry, dict):
            raise AlgebraFileError(f"{where}: entry must be an object")
        for member in ("op", "i", "j", "value"):
            if member not in entry:
                raise AlgebraFileError(f"{where}: missing member {member!r}")
        op, i, j, value = entry["op"], entry["i"], entry["j"], entry["value"]
        if op not in OPS:
            raise AlgebraFileError(f"{where}: unknown op {op!r}")
        if not isinstance(i, int) or not isinstance(j, int) or not (0 <= i < dim and 0 <= j < dim):
            raise AlgebraFileError(f"{where}: indices ({i!r}, {j!r}) out of range for dim {dim}")
        if (op, i, j) in seen:
            raise AlgebraFileError(f"{where}: duplicate product entry ({op}, {i}, {j})")
        seen.add((op, i, j))
        if not isinstance(value, list) or len(value) != dim:
            raise AlgebraFileError(f"{where}: value must be a list of {dim} scalar strings")
        vec = {}
        for k, text in enumerate(value):
            if not isinstance(text, str):
                raise AlgebraFileError(f"{where}: value[{k}] must be a string")
            try:
                scalar = field.parse(text)
            except ValueError as exc:
                raise AlgebraFileError(f"{where}: value[{k}]: {exc}") from None
            if scalar:
                vec[k] = scalar
        if vec:
            products[op][(i, j)] = vec
    return TriAlgebra(dim, field, products)


def emit(a: TriAlgebra) -> str:
    return json.dumps(algebra_to_dict(a), indent=2) + "\n"


def parse(text: str) -> TriAlgebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFileError(f"invalid JSON: {exc}") from None
    return algebra_from_dict(doc)


def load(path: str) -> TriAlgebra:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


def save(path: str, a: TriAlgebra) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit(a))
