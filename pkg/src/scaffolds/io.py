"""JSON encodings of schemes, diagrams, tensors and reports.

Complex numbers are ``[re, im]`` pairs rounded to 12 decimals so that output
is stable byte for byte.  Anywhere a file is expected, ``builtin:NAME`` (or
``builtin:NAME:1,2,3`` to pass class labels to a diagram) selects a catalog
entry instead.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import numpy as np

from . import catalog
from .diagrams import Diagram, Edge, build_diagram, format_dart, trace_faces
from .errors import InvalidInput
from .evaluate import ScaffoldTensor
from .groups import make_abelian_group
from .schemes import BMElement, Scheme, intersection_numbers, krein_parameters, scheme_from_relations
from .translation import TranslationScheme, translation_scheme

DIGITS = 12


def encode_complex(z) -> list[float]:
    z = complex(z)
    re, im = round(z.real, DIGITS), round(z.imag, DIGITS)
    return [re + 0.0, im + 0.0]  # + 0.0 turns -0.0 into 0.0


def decode_complex(v) -> complex:
    if isinstance(v, (list, tuple)):
        if len(v) != 2:
            raise InvalidInput(f"complex number must be [re, im], got {v!r}")
        return complex(float(v[0]), float(v[1]))
    if isinstance(v, (int, float)):
        return complex(v)
    raise InvalidInput(f"not a number: {v!r}")


def encode_array(a) -> Any:
    a = np.asarray(a)
    if a.ndim == 0:
        return encode_complex(a)
    return [encode_array(x) for x in a]


def _field(obj: dict, key: str, where: str):
    if not isinstance(obj, dict):
        raise InvalidInput(f"{where}: expected a JSON object")
    if key not in obj:
        raise InvalidInput(f"{where}: missing field {key!r}")
    return obj[key]


# --- sources ---------------------------------------------------------------

def read_json(source: str):
    """Parse a JSON file, reporting line and column on syntax errors."""
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise InvalidInput(f"{source}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def _builtin(source: str):
    rest = source[len("builtin:"):]
    name, _, labels = rest.partition(":")
    try:
        labels = tuple(int(x) for x in labels.split(",")) if labels else ()
    except ValueError:
        raise InvalidInput(f"bad labels in {source!r}") from None
    return name, labels


def load_scheme(source: str) -> Scheme | TranslationScheme:
    if source.startswith("builtin:"):
        name, _ = _builtin(source)
        return catalog.scheme(name)
    return scheme_from_json(read_json(source))


def load_diagram(source: str) -> Diagram:
    if source.startswith("builtin:"):
        name, labels = _builtin(source)
        return catalog.diagram(name, labels)
    return diagram_from_json(read_json(source))


# --- schemes ---------------------------------------------------------------

def scheme_from_json(obj) -> Scheme | TranslationScheme:
    kind = _field(obj, "kind", "scheme")
    if kind == "explicit":
        n = int(_field(obj, "size", "scheme"))
        mats = []
        for k, rel in enumerate(_field(obj, "relations", "scheme")):
            a = np.array(rel)
            if a.ndim == 1:
                if a.size != n * n:
                    raise InvalidInput(f"scheme.relations[{k}]: {a.size} entries, expected {n * n}")
                a = a.reshape(n, n)
            mats.append(a)
        return scheme_from_relations(mats)
    if kind == "translation":
        group = _field(obj, "group", "scheme")
        g = make_abelian_group(_field(group, "orders", "scheme.group"))
        classes = _field(obj, "classes", "scheme")
        return translation_scheme(g, classes, eigen_classes=obj.get("eigen_classes"))
    raise InvalidInput(f"scheme.kind: unknown kind {kind!r} (expected 'explicit' or 'translation')")


def scheme_to_json(s: Scheme | TranslationScheme) -> dict:
    if isinstance(s, TranslationScheme):
        return {
            "kind": "translation",
            "group": {"orders": list(s.group.orders)},
            "classes": [[list(x) for x in c] for c in s.connection_sets],
            "eigen_classes": [[list(x) for x in c] for c in s.eigen_classes],
        }
    return {
        "kind": "explicit",
        "size": s.size,
        "relations": [a.ravel().tolist() for a in s.relations],
    }


def params_to_json(s: Scheme | TranslationScheme) -> dict:
    s = s.scheme if isinstance(s, TranslationScheme) else s
    out = {"p": intersection_numbers(s).values.tolist(), "q": None, "P": None, "Q": None}
    if s.has_eigen_data:
        out["q"] = encode_array(krein_parameters(s).values)
        out["P"] = encode_array(s.P)
        out["Q"] = encode_array(s.Q)
    return out


# --- diagrams --------------------------------------------------------------

def weight_from_json(obj, where: str) -> BMElement:
    basis = _field(obj, "basis", where)
    if "index" in obj:
        return BMElement.unit(basis, int(obj["index"]))
    coeffs = _field(obj, "coeffs", where)
    return BMElement(basis, tuple(decode_complex(c) for c in coeffs))


def weight_to_json(w: BMElement) -> dict:
    if w.index is not None:
        return {"basis": w.basis, "index": w.index}
    return {"basis": w.basis, "coeffs": [encode_complex(c) for c in w.coeffs]}


def diagram_from_json(obj) -> Diagram:
    nodes = _field(obj, "nodes", "diagram")
    edges = []
    for k, e in enumerate(_field(obj, "edges", "diagram")):
        where = f"diagram.edges[{k}]"
        edges.append(Edge(str(_field(e, "id", where)), str(_field(e, "tail", where)),
                          str(_field(e, "head", where)), weight_from_json(e, where)))
    return build_diagram(nodes, edges, obj.get("roots", []), obj.get("rotation"))


def diagram_to_json(d: Diagram) -> dict:
    out = {
        "nodes": list(d.nodes),
        "roots": list(d.roots),
        "edges": [{"id": e.id, "tail": e.tail, "head": e.head, **weight_to_json(e.weight)}
                  for e in d.edges],
    }
    if d.rotation is not None:
        out["rotation"] = {v: [format_dart(x) for x in d.rotation.get(v, ())] for v in d.nodes}
    return out


def faces_to_json(d: Diagram) -> dict:
    fs = trace_faces(d)

    def name(dart):
        key, end = dart
        return f"b{key + 1}:{end}" if isinstance(key, int) else format_dart(dart)

    return {
        "faces": [[name(x) for x in f] for f in fs.faces],
        "outer": fs.outer,
        "boundary": list(fs.boundary_faces[: d.ell]),
        "interior": list(fs.interior),
        "edges": {e.id: {"left": fs.left(e.id), "right": fs.right(e.id)} for e in d.edges},
        "euler": {"nodes": d.n, "edges": d.m + d.ell, "faces": fs.count},
    }


# --- tensors ---------------------------------------------------------------

def tensor_to_json(t: ScaffoldTensor) -> dict:
    return {"ell": t.ell, "size": t.base_size,
            "entries": [encode_complex(z) for z in np.ravel(t.entries)]}


def tensor_from_json(obj) -> ScaffoldTensor:
    ell = int(_field(obj, "ell", "tensor"))
    n = int(_field(obj, "size", "tensor"))
    vals = [decode_complex(z) for z in _field(obj, "entries", "tensor")]
    if len(vals) != n ** ell:
        raise InvalidInput(f"tensor.entries: {len(vals)} values, expected {n ** ell}")
    return ScaffoldTensor(ell, n, np.array(vals, dtype=complex).reshape((n,) * ell))


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)
