"""JSON document formats for witnesses, families, certificates and matrices.

All documents are JSON objects; algebra elements are element-expression
strings, K-theory elements are monoid/group-expression strings.

========================  ==================================================
document                  keys
========================  ==================================================
equivalence witness       ``x``, ``y``, optional ``shift``
E-family                  ``vertices`` {v: expr}, ``edges`` {e: {x, y}},
                          optional ``source``/``target`` graph references
class certificate         ``p``, ``class``, ``parts`` [{p, vertex, x, y, shift}]
certificate map           ``certificates`` {v: class certificate}
pointed homomorphism      ``images`` {v: gexpr}, optional ``cert`` {v: mexpr}
hom pair                  ``phi``, ``psi`` (E-families)
cond2 witnesses           ``vertices`` {v: {x, y}}, ``edges`` {e: {x, y}}
assembly witnesses        ``edges`` {e: {x, y}}, ``sinks`` {v: {x, y}}
x/y pair                  ``x``, ``y``
conjugator                ``z``, optional ``z_inv`` (defaults to ``z*``)
matrix                    ``rows``
SE witness                ``R``, ``S``, ``lag``
SSE chain                 ``steps`` [{R, S}]
========================  ==================================================

Graph references are built-in names, paths (relative to the document),
or inline graph objects.
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import LeavittPathAlgebra
from .errors import InputError
from .graph import load_graph
from .grothendieck import PointedHom, parse_group_element
from .homs import ClassCertificate, ClassPart, EFamily
from .idempotents import EquivWitness
from .monoid import parse_monoid_element
from .parsing import parse_element
from .shift import SEWitness, as_matrix


def read_json(path) -> dict:
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(exc.msg, f"{path}: line {exc.lineno} column {exc.colno}") from None
    if not isinstance(doc, dict):
        raise InputError("document must be a JSON object", str(path))
    return doc


def _get(doc, key, where):
    if not isinstance(doc, dict) or key not in doc:
        raise InputError(f"missing key {key!r}", where)
    return doc[key]


def _elem(text, alg, where):
    if not isinstance(text, str):
        raise InputError("expected an element expression string", where)
    try:
        return parse_element(text, alg)
    except InputError as exc:
        raise type(exc)(str(exc), where) from None


def xy_from_doc(doc, alg, where="") -> tuple:
    return _elem(_get(doc, "x", where), alg, f"{where}.x"), _elem(_get(doc, "y", where), alg, f"{where}.y")


def witness_from_doc(doc, alg, where="witness"):
    """``(x, y, shift)``; ``shift`` defaults to the degree of ``x``."""
    x, y = xy_from_doc(doc, alg, where)
    shift = doc.get("shift")
    if shift is None:
        shift = x.degree() if x.degree() is not None else 0
    if not isinstance(shift, int):
        raise InputError("shift must be an integer", f"{where}.shift")
    return EquivWitness(x, y, shift)


def graph_ref(doc, key, default, base_dir):
    ref = doc.get(key) if isinstance(doc, dict) else None
    if ref is None:
        if default is None:
            raise InputError(f"no {key} graph given")
        return default
    return load_graph(ref, base_dir)


def efamily_from_doc(doc, source, target: LeavittPathAlgebra, where="family") -> EFamily:
    verts = _get(doc, "vertices", where)
    edges = _get(doc, "edges", where)
    p = {v: _elem(expr, target, f"{where}.vertices.{v}") for v, expr in verts.items()}
    x, y = {}, {}
    for e, spec in edges.items():
        x[e], y[e] = xy_from_doc(spec, target, f"{where}.edges.{e}")
    unknown = [v for v in p if not source.is_vertex(v)] + [e for e in x if not source.is_edge(e)]
    if unknown:
        raise InputError(f"names not in the source graph: {unknown}", where)
    return EFamily(source, target, p, x, y)


def load_efamily(path, source=None, target=None, field=None):
    doc = read_json(path)
    base = Path(path).parent
    src = graph_ref(doc, "source", source, base)
    tgt = graph_ref(doc, "target", target, base)
    alg = LeavittPathAlgebra(tgt) if field is None else LeavittPathAlgebra(tgt, field)
    return efamily_from_doc(doc, src, alg)


def class_certificate_from_doc(doc, alg, where="certificate") -> ClassCertificate:
    p = _elem(_get(doc, "p", where), alg, f"{where}.p")
    claimed = parse_group_element(_get(doc, "class", where), alg.graph)
    parts = []
    for i, part in enumerate(_get(doc, "parts", where)):
        loc = f"{where}.parts[{i}]"
        vertex = _get(part, "vertex", loc)
        if not alg.graph.is_vertex(vertex):
            raise InputError(f"unknown vertex {vertex!r}", f"{loc}.vertex")
        parts.append(ClassPart(_elem(_get(part, "p", loc), alg, f"{loc}.p"), witness_from_doc(part, alg, loc), vertex))
    return ClassCertificate(p, claimed, parts)


def certificates_from_doc(doc, alg) -> dict:
    certs = doc.get("certificates", doc)
    return {v: class_certificate_from_doc(c, alg, f"certificates.{v}") for v, c in certs.items()}


def pointed_hom_from_doc(doc, source, target) -> PointedHom:
    images = doc.get("images", doc.get("vertices"))
    if images is None:
        raise InputError("missing key 'images'")
    imgs = {v: parse_group_element(expr, target) for v, expr in images.items()}
    certs = {v: parse_monoid_element(expr, target) for v, expr in doc.get("cert", {}).items()}
    return PointedHom(source, target, imgs, certs)


def hompair_from_doc(doc, source, target_alg):
    return (
        efamily_from_doc(_get(doc, "phi", "pair"), source, target_alg, "phi"),
        efamily_from_doc(_get(doc, "psi", "pair"), source, target_alg, "psi"),
    )


def pair_map(doc, key, alg) -> dict:
    return {k: xy_from_doc(v, alg, f"{key}.{k}") for k, v in doc.get(key, {}).items()}


def conjugator_from_doc(doc, alg):
    from .faithfulness import Conjugator

    z = _elem(_get(doc, "z", "conjugator"), alg, "z")
    z_inv = _elem(doc["z_inv"], alg, "z_inv") if "z_inv" in doc else z.star()
    return Conjugator(z, z_inv)


def matrix_from_doc(doc):
    return as_matrix(_get(doc, "rows", "matrix") if isinstance(doc, dict) else doc)


def se_witness_from_doc(doc) -> SEWitness:
    lag = doc.get("lag", 1)
    if not isinstance(lag, int):
        raise InputError("lag must be an integer", "lag")
    return SEWitness(matrix_from_doc(_get(doc, "R", "witness")), matrix_from_doc(_get(doc, "S", "witness")), lag)


def chain_from_doc(doc) -> list:
    steps = doc.get("steps", []) if isinstance(doc, dict) else doc
    return [(matrix_from_doc(_get(s, "R", f"steps[{i}]")), matrix_from_doc(_get(s, "S", f"steps[{i}]")))
            for i, s in enumerate(steps)]
