"""JSON exchange formats and the standard corpus emitter.

Object file:     {"name": str, "order": n, "add": [[...]], "act": [[...]]}
Report:          {"passed": bool, "violations": [{"condition", "witness"}]}
Triple file:     {"A": name, "B": name, "dot": [[...]], "up": [[...]], "pow": [[...]]}
Pentaction file: {"object": name, "dotL": [...], ..., "pow": [...]}
Extension file:  {"A": path, "E": path, "B": path, "i": [...], "p": [...], "j": [...]}

All emitters are byte-stable: keys sorted, fixed separators, trailing newline.
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import FiniteGwaObject, GwaMorphism, as_index, make_object
from .corpus import s3_conjugation_tables, standard_corpus
from .errors import InputError
from .extensions import DerivedActionTriple, SplitExtension
from .pentactions import Pentaction


def dumps_canonical(data, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(data, sort_keys=True, indent=2) + "\n"
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"


def object_to_json(obj: FiniteGwaObject) -> dict:
    return {
        "name": obj.name,
        "order": obj.order,
        "add": [list(row) for row in obj.add],
        "act": [list(row) for row in obj.act],
    }


def parse_object_json(data: dict) -> tuple[str, int, list, list]:
    """Pull the raw fields out of an object document without validating the
    axioms (the caller decides whether failures are errors or reports)."""
    if not isinstance(data, dict):
        raise InputError("object document must be a JSON object")
    missing = {"name", "order", "add", "act"} - data.keys()
    if missing:
        raise InputError(f"object document is missing keys: {sorted(missing)}")
    name, order = data["name"], data["order"]
    if not isinstance(name, str):
        raise InputError("object name must be a string")
    if not isinstance(order, int) or order < 1:
        raise InputError("object order must be a positive integer")
    return name, order, data["add"], data["act"]


def object_from_json(data: dict, require_reduced: bool = True) -> FiniteGwaObject:
    name, order, add, act = parse_object_json(data)
    return make_object(name, order, add, act, require_reduced=require_reduced)


def load_object(path, require_reduced: bool = True) -> FiniteGwaObject:
    return object_from_json(read_json(path), require_reduced=require_reduced)


def save_object(obj: FiniteGwaObject, path, pretty: bool = True) -> None:
    Path(path).write_text(dumps_canonical(object_to_json(obj), pretty=pretty), encoding="utf-8")


def read_json(path):
    """Load a JSON document, turning parse failures into position-bearing
    input errors."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(
            f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc


def triple_to_json(triple: DerivedActionTriple) -> dict:
    return {
        "A": triple.A.name,
        "B": triple.B.name,
        "dot": [list(r) for r in triple.dot],
        "up": [list(r) for r in triple.up],
        "pow": [list(r) for r in triple.pow],
    }


def triple_from_json(data: dict, A: FiniteGwaObject, B: FiniteGwaObject) -> DerivedActionTriple:
    missing = {"A", "B", "dot", "up", "pow"} - data.keys()
    if missing:
        raise InputError(f"triple document is missing keys: {sorted(missing)}")
    if data["A"] != A.name or data["B"] != B.name:
        raise InputError(
            f"triple references ({data['A']!r}, {data['B']!r}), "
            f"got objects ({A.name!r}, {B.name!r})"
        )
    def table(rows):
        return tuple(tuple(as_index(v) for v in row) for row in rows)
    return DerivedActionTriple(A, B, table(data["dot"]), table(data["up"]), table(data["pow"]))


def pentaction_to_json(pent: Pentaction) -> dict:
    out: dict = {"object": pent.parent.name}
    for slot, table in pent.tables().items():
        out[slot] = list(table)
    return out


def pentaction_from_json(data: dict, obj: FiniteGwaObject) -> Pentaction:
    missing = {"object", "dotL", "dotR", "up", "upL", "pow"} - data.keys()
    if missing:
        raise InputError(f"pentaction document is missing keys: {sorted(missing)}")
    if data["object"] != obj.name:
        raise InputError(
            f"pentaction references object {data['object']!r}, got {obj.name!r}"
        )
    return Pentaction(
        obj,
        *(tuple(as_index(v) for v in data[slot]) for slot in ("dotL", "dotR", "up", "upL", "pow")),
    )


def extension_to_json(object_paths: dict[str, str], ext: SplitExtension) -> dict:
    """Serialize by reference: the three object file paths plus map sequences."""
    missing = {"A", "E", "B"} - object_paths.keys()
    if missing:
        raise InputError(f"extension document needs object paths for {sorted(missing)}")
    return {
        "A": object_paths["A"],
        "E": object_paths["E"],
        "B": object_paths["B"],
        "i": list(ext.i.map),
        "p": list(ext.p.map),
        "j": list(ext.j.map),
    }


def load_split_extension(path) -> SplitExtension:
    """Load an extension file, resolving object paths relative to it."""
    data = read_json(path)
    missing = {"A", "E", "B", "i", "p", "j"} - data.keys()
    if missing:
        raise InputError(f"{path}: extension document is missing keys: {sorted(missing)}")
    base = Path(path).parent
    a = load_object(base / data["A"])
    e = load_object(base / data["E"])
    b = load_object(base / data["B"])
    return SplitExtension(
        a, e, b,
        i=GwaMorphism(a, e, tuple(as_index(v) for v in data["i"])),
        p=GwaMorphism(e, b, tuple(as_index(v) for v in data["p"])),
        j=GwaMorphism(b, e, tuple(as_index(v) for v in data["j"])),
    )


def emit_corpus(directory) -> list[str]:
    """Write the standard corpus as object files; byte-stable across runs.

    Emits z1..z8, klein4 and z2xz4 (all valid) plus s3_conjugation, the
    negative example that fails the reduced checks by construction.
    """
    out_dir = Path(directory)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for obj in standard_corpus():
        path = out_dir / f"{obj.name}.json"
        save_object(obj, path)
        written.append(str(path))
    add, act = s3_conjugation_tables()
    negative = {
        "name": "s3_conjugation",
        "order": len(add),
        "add": [list(row) for row in add],
        "act": [list(row) for row in act],
    }
    path = out_dir / "s3_conjugation.json"
    path.write_text(dumps_canonical(negative, pretty=True), encoding="utf-8")
    written.append(str(path))
    return written
