"""Canonical JSON files for algebras, products and linear maps.

Algebra::

    {"name": str, "dim": n, "basis": [str x n],
     "brackets": [{"left": i, "right": j, "value": [[k, SCALAR], ...]}, ...]}

with 0-based indices, ``left < right``, at most one entry per pair and
omitted pairs meaning zero.  Product files are identical with the key
``"products"`` and ``left <= right``.  Linear maps are
``{"dim": n, "matrix": [[SCALAR x n] x n]}`` where column j holds the image of
basis vector j.

Writers are deterministic (sorted pairs, sorted outputs, zero terms dropped)
so that parse -> write reproduces a canonical file byte for byte.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Mapping

from .errors import FormatError
from .lie import BilinearMap, LieAlgebra, LinearMap, require_lie
from .linalg import Matrix
from .scalar import Scalar, format_scalar, parse_scalar

__all__ = [
    "algebra_to_json",
    "algebra_from_json",
    "product_to_json",
    "product_from_json",
    "linear_map_to_json",
    "linear_map_from_json",
    "load_algebra",
    "load_product",
    "load_linear_map",
]


def _dumps(x) -> str:
    return json.dumps(x, ensure_ascii=False)


def _table_entries(table: Mapping) -> list[str]:
    lines = []
    for (i, j) in sorted(table):
        value = [[k, format_scalar(c)] for k, c in sorted(table[(i, j)].items())]
        lines.append(_dumps({"left": i, "right": j, "value": value}))
    return lines


def _document(name: str, dim: int, basis, key: str, entries: list[str]) -> str:
    head = [
        f'  "name": {_dumps(name)}',
        f'  "dim": {dim}',
        f'  "basis": {_dumps(list(basis))}',
    ]
    if entries:
        body = f'  "{key}": [\n' + ",\n".join("    " + e for e in entries) + "\n  ]"
    else:
        body = f'  "{key}": []'
    return "{\n" + ",\n".join(head + [body]) + "\n}\n"


def algebra_to_json(L: LieAlgebra) -> str:
    return _document(L.name, L.dim, L.basis, "brackets", _table_entries(L.brackets))


def product_to_json(d: BilinearMap, name: str = "", basis=()) -> str:
    basis = list(basis) or [f"e{i}" for i in range(d.dim)]
    return _document(name, d.dim, basis, "products", _table_entries(d.products))


def linear_map_to_json(phi: LinearMap) -> str:
    rows = [[format_scalar(x) for x in phi.matrix.row(i)] for i in range(phi.dim)]
    return '{"dim": ' + str(phi.dim) + ', "matrix": ' + _dumps(rows) + "}\n"


# -- parsing ---------------------------------------------------------------

def _load(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"{source}: invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}") from None


def _scalar(x, where: str) -> Scalar:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise FormatError(f"{where}: expected a SCALAR string, got {x!r}")
    try:
        return parse_scalar(str(x))
    except FormatError as e:
        raise FormatError(f"{where}: {e}") from None


def _int(x, where: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise FormatError(f"{where}: expected an integer, got {x!r}")
    return x


def _header(doc, source: str, key: str):
    if not isinstance(doc, dict):
        raise FormatError(f"{source}: top level must be an object")
    if "dim" not in doc:
        raise FormatError(f"{source}: missing field 'dim'")
    dim = _int(doc["dim"], f"{source}: field 'dim'")
    if dim < 0:
        raise FormatError(f"{source}: field 'dim' must be non-negative")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise FormatError(f"{source}: field 'name' must be a string")
    basis = doc.get("basis", [f"e{i}" for i in range(dim)])
    if not isinstance(basis, list) or len(basis) != dim or not all(isinstance(b, str) for b in basis):
        raise FormatError(f"{source}: field 'basis' must list {dim} strings")
    if key not in doc:
        raise FormatError(f"{source}: missing field '{key}'")
    if not isinstance(doc[key], list):
        raise FormatError(f"{source}: field '{key}' must be a list")
    return name, dim, basis


def _parse_table(entries: list, dim: int, key: str, source: str, strict: bool) -> dict:
    table: dict = {}
    for pos, entry in enumerate(entries):
        where = f"{source}: {key}[{pos}]"
        if not isinstance(entry, dict):
            raise FormatError(f"{where}: expected an object")
        for field_name in ("left", "right", "value"):
            if field_name not in entry:
                raise FormatError(f"{where}: missing field '{field_name}'")
        i = _int(entry["left"], f"{where}.left")
        j = _int(entry["right"], f"{where}.right")
        if not (0 <= i < dim and 0 <= j < dim):
            raise FormatError(f"{where}: pair ({i}, {j}) out of range for dim {dim}")
        if (strict and i >= j) or (not strict and i > j):
            rel = "left < right" if strict else "left <= right"
            raise FormatError(f"{where}: pair ({i}, {j}) violates {rel}")
        if (i, j) in table:
            raise FormatError(f"{where}: duplicate entry for pair ({i}, {j})")
        value = entry["value"]
        if not isinstance(value, list):
            raise FormatError(f"{where}.value: expected a list of [index, SCALAR]")
        coeffs: dict = {}
        for q, term in enumerate(value):
            tw = f"{where}.value[{q}]"
            if not isinstance(term, list) or len(term) != 2:
                raise FormatError(f"{tw}: expected [index, SCALAR]")
            k = _int(term[0], f"{tw}[0]")
            if not 0 <= k < dim:
                raise FormatError(f"{tw}: output index {k} out of range for dim {dim}")
            if k in coeffs:
                raise FormatError(f"{tw}: repeated output index {k} in pair ({i}, {j})")
            coeffs[k] = _scalar(term[1], f"{tw}[1]")
        table[(i, j)] = coeffs
    return table


def algebra_from_json(text: str, source: str = "<algebra>", validate: bool = True) -> LieAlgebra:
    """Parse an algebra file; with ``validate`` the Jacobi identity is enforced."""
    doc = _load(text, source)
    name, dim, basis = _header(doc, source, "brackets")
    table = _parse_table(doc["brackets"], dim, "brackets", source, strict=True)
    L = LieAlgebra(dim, table, tuple(basis), name)
    if validate:
        require_lie(L)
    return L


def product_from_json(text: str, source: str = "<product>") -> BilinearMap:
    doc = _load(text, source)
    _, dim, _ = _header(doc, source, "products")
    table = _parse_table(doc["products"], dim, "products", source, strict=False)
    return BilinearMap(dim, table)


def linear_map_from_json(text: str, source: str = "<map>") -> LinearMap:
    doc = _load(text, source)
    if not isinstance(doc, dict) or "dim" not in doc or "matrix" not in doc:
        raise FormatError(f"{source}: expected an object with fields 'dim' and 'matrix'")
    dim = _int(doc["dim"], f"{source}: field 'dim'")
    rows = doc["matrix"]
    if not isinstance(rows, list) or len(rows) != dim or any(not isinstance(r, list) or len(r) != dim for r in rows):
        raise FormatError(f"{source}: field 'matrix' must be {dim} rows of {dim} scalars")
    entries = tuple(_scalar(x, f"{source}: matrix[{i}][{j}]") for i, r in enumerate(rows) for j, x in enumerate(r))
    return LinearMap(dim, Matrix(dim, dim, entries))


def _read(path) -> str:
    return Path(path).read_text(encoding="utf-8")


def load_algebra(path, validate: bool = True) -> LieAlgebra:
    return algebra_from_json(_read(path), str(path), validate)


def load_product(path) -> BilinearMap:
    return product_from_json(_read(path), str(path))


def load_linear_map(path) -> LinearMap:
    return linear_map_from_json(_read(path), str(path))
