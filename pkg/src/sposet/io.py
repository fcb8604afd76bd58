"""JSON input and output formats.

Format tags: "sposet-v1" (explicit face lattice), "scomplex-v1"
(facet shorthand for genuine complexes), "charfn-v1" (vertex vector
assignment), "cone-v1" and "manifold-v1" (quotient problem bundles).
Emission is canonical: sorted keys, fixed separators, elements in
(rank, id) order, so identical inputs serialize byte-identically.
"""
from __future__ import annotations

import json
from pathlib import Path

from . import spectral
from .charfn import CharFunction
from .errors import SchemaViolation, UnknownFormat
from .homology import parse_coefficients
from .poset import SimplexElem, SimplicialPoset, from_face_lattice, from_facets
from .spectral import QuotientProblem


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _need(doc: dict, key: str, kind=None):
    if key not in doc:
        raise SchemaViolation(f"missing key {key!r} in {doc.get('format', '?')}")
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise SchemaViolation(
            f"key {key!r}: expected {kind.__name__}, got {type(value).__name__}"
        )
    return value


def _parse_poset(doc: dict) -> SimplicialPoset:
    fmt = doc.get("format")
    name = str(doc.get("name", ""))
    if fmt == "scomplex-v1":
        facets = _need(doc, "facets", list)
        return from_facets(facets, name=name)
    elements = _need(doc, "elements", list)
    elems = []
    for idx, raw in enumerate(elements):
        if not isinstance(raw, dict):
            raise SchemaViolation(f"elements[{idx}] is not an object")
        elems.append(
            SimplexElem(
                str(_need(raw, "id")),
                tuple(str(v) for v in _need(raw, "vertices", list)),
                tuple(str(f) for f in _need(raw, "facets", list)),
            )
        )
    n = doc.get("n")
    return from_face_lattice(elems, n=n, name=name)


def _parse_charfn(doc: dict) -> CharFunction:
    n = _need(doc, "n", int)
    assignment = _need(doc, "assignment", dict)
    return CharFunction(n, {str(k): tuple(v) for k, v in assignment.items()})


def _parse_problem(doc: dict) -> QuotientProblem:
    kind = spectral.CONE if doc["format"] == "cone-v1" else spectral.MANIFOLD
    poset_doc = _need(doc, "poset", dict)
    poset = _parse_poset(poset_doc)
    n = _need(doc, "n", int)
    coeff = parse_coefficients(str(_need(doc, "field")))
    lam = None
    if doc.get("charfn") is not None:
        lam = _parse_charfn(_need(doc, "charfn", dict))
    kwargs = {}
    if kind == spectral.MANIFOLD:
        kwargs["betti_q"] = tuple(_need(doc, "bettiQ", list))
        kwargs["iota"] = tuple(_need(doc, "iota", list))
        kwargs["orientable"] = _need(doc, "orientable", bool)
    return spectral.make_problem(kind, poset, n, coeff, charfn=lam, **kwargs)


_PARSERS = {
    "sposet-v1": _parse_poset,
    "scomplex-v1": _parse_poset,
    "charfn-v1": _parse_charfn,
    "cone-v1": _parse_problem,
    "manifold-v1": _parse_problem,
}


def parse(source):
    """Decode a JSON document (text or dict) into a validated object."""
    if isinstance(source, (str, bytes)):
        try:
            doc = json.loads(source)
        except json.JSONDecodeError as exc:
            raise SchemaViolation(f"not valid JSON: {exc}") from None
    else:
        doc = source
    if not isinstance(doc, dict):
        raise SchemaViolation("top level must be a JSON object")
    fmt = doc.get("format")
    parser = _PARSERS.get(fmt)
    if parser is None:
        raise UnknownFormat(f"unknown format tag {fmt!r}")
    return parser(doc)


def parse_path(path) -> object:
    return parse(Path(path).read_text(encoding="utf-8"))


def emit_poset(S: SimplicialPoset) -> dict:
    doc = {
        "format": "sposet-v1",
        "name": S.name,
        "elements": [
            {
                "id": e.id,
                "vertices": list(e.vertices),
                "facets": list(e.facets),
            }
            for e in S.elements()
        ],
    }
    if S.n != max((e.rank for e in S.elements()), default=0):
        doc["n"] = S.n
    return doc


def emit_charfn(lam: CharFunction) -> dict:
    return {
        "format": "charfn-v1",
        "n": lam.n,
        "assignment": {k: list(v) for k, v in sorted(lam.assignment.items())},
    }


def emit_problem(prob: QuotientProblem) -> dict:
    doc = {
        "format": "cone-v1" if prob.kind == spectral.CONE else "manifold-v1",
        "poset": emit_poset(prob.poset),
        "n": prob.n,
        "field": prob.coeff.label,
        "charfn": emit_charfn(prob.charfn) if prob.charfn else None,
    }
    if prob.kind == spectral.MANIFOLD:
        doc["bettiQ"] = list(prob.betti_q)
        doc["iota"] = list(prob.iota)
        doc["orientable"] = prob.orientable
    return doc


def emit(obj) -> dict:
    if isinstance(obj, SimplicialPoset):
        return emit_poset(obj)
    if isinstance(obj, CharFunction):
        return emit_charfn(obj)
    if isinstance(obj, QuotientProblem):
        return emit_problem(obj)
    raise TypeError(f"cannot emit {type(obj).__name__}")
