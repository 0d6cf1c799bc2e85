"""Finite directed graphs, vertex classification and the graph file format.

A graph file is a JSON document::

    {"vertices": ["u", "v"],
     "edges": [{"name": "e", "src": "u", "rng": "u"},
               {"name": "g", "src": "u", "rng": "v"}]}

Vertex and edge order is the order of the file; every canonical form
downstream (normal forms, matrices, printing) uses it.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

import numpy as np

from .errors import DanglingEndpoint, DuplicateName, EmptyGraph, GraphFormatError

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class Edge(NamedTuple):
    name: str
    src: str
    rng: str


@dataclass(frozen=True)
class VertexClass:
    sinks: frozenset
    regular: frozenset


class Graph:
    """An immutable finite directed graph with named vertices and edges."""

    def __init__(self, vertices, edges, name=None):
        self.vertices = tuple(vertices)
        self.edges = tuple(Edge(*e) for e in edges)
        self.name = name

        seen = set()
        for i, v in enumerate(self.vertices):
            if v in seen:
                raise DuplicateName(f"duplicate vertex name {v!r}", f"vertices[{i}]")
            seen.add(v)
        if not self.vertices:
            raise EmptyGraph("graph has no vertices", "vertices")
        vset = set(self.vertices)
        for i, e in enumerate(self.edges):
            if e.name in seen:
                raise DuplicateName(f"duplicate name {e.name!r}", f"edges[{i}].name")
            seen.add(e.name)
            for key in ("src", "rng"):
                if getattr(e, key) not in vset:
                    raise DanglingEndpoint(
                        f"edge {e.name!r} refers to unknown vertex {getattr(e, key)!r}",
                        f"edges[{i}].{key}",
                    )

        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self.edge_index = {e.name: i for i, e in enumerate(self.edges)}
        self.src = {e.name: e.src for e in self.edges}
        self.rng = {e.name: e.rng for e in self.edges}
        out = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.src].append(e.name)
        self.out_edges = {v: tuple(es) for v, es in out.items()}
        # special edge: lexicographically least name among the edges a vertex emits
        self.special = {v: min(es) for v, es in self.out_edges.items() if es}

    @property
    def edge_names(self):
        return tuple(e.name for e in self.edges)

    def is_vertex(self, name):
        return name in self.vertex_index

    def is_edge(self, name):
        return name in self.edge_index

    def is_sink(self, v):
        return not self.out_edges[v]

    def is_regular(self, v):
        return bool(self.out_edges[v])

    @property
    def regular_vertices(self):
        return tuple(v for v in self.vertices if self.out_edges[v])

    @property
    def sinks(self):
        return tuple(v for v in self.vertices if not self.out_edges[v])

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        label = f"{self.name!r}, " if self.name else ""
        return f"Graph({label}{len(self.vertices)} vertices, {len(self.edges)} edges)"

    def to_dict(self):
        return {
            "vertices": list(self.vertices),
            "edges": [{"name": e.name, "src": e.src, "rng": e.rng} for e in self.edges],
        }


def graph_from_dict(doc, name=None) -> Graph:
    if not isinstance(doc, dict):
        raise GraphFormatError("graph document must be an object")
    for key in ("vertices", "edges"):
        if key not in doc:
            raise GraphFormatError(f"missing key {key!r}")
        if not isinstance(doc[key], list):
            raise GraphFormatError(f"{key!r} must be an array", key)
    vertices = []
    for i, v in enumerate(doc["vertices"]):
        if not isinstance(v, str) or not NAME_RE.match(v):
            raise GraphFormatError(f"invalid vertex name {v!r}", f"vertices[{i}]")
        vertices.append(v)
    edges = []
    for i, e in enumerate(doc["edges"]):
        if not isinstance(e, dict):
            raise GraphFormatError("edge must be an object", f"edges[{i}]")
        for key in ("name", "src", "rng"):
            val = e.get(key)
            if not isinstance(val, str) or not NAME_RE.match(val):
                raise GraphFormatError(f"invalid or missing {key!r}", f"edges[{i}].{key}")
        edges.append((e["name"], e["src"], e["rng"]))
    return Graph(vertices, edges, name=name)


def parse_graph(text: str, name=None) -> Graph:
    """Parse a graph file (JSON text) into a :class:`Graph`."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    return graph_from_dict(doc, name=name)


def classify_vertices(g: Graph) -> VertexClass:
    return VertexClass(sinks=frozenset(g.sinks), regular=frozenset(g.regular_vertices))


def incidence_matrix(g: Graph) -> np.ndarray:
    """``A[i, j]`` is the number of edges from vertex ``i`` to vertex ``j`` (file order)."""
    n = len(g.vertices)
    a = np.zeros((n, n), dtype=np.int64)
    for e in g.edges:
        a[g.vertex_index[e.src], g.vertex_index[e.rng]] += 1
    return a


BUILTIN_GRAPHS = {
    # one vertex, two loops
    "l2": {
        "vertices": ["v"],
        "edges": [{"name": "e", "src": "v", "rng": "v"}, {"name": "f", "src": "v", "rng": "v"}],
    },
    "loop1": {"vertices": ["u"], "edges": [{"name": "e", "src": "u", "rng": "u"}]},
    # u carries loops e, f and emits g to the sink v
    "ex42": {
        "vertices": ["u", "v"],
        "edges": [
            {"name": "e", "src": "u", "rng": "u"},
            {"name": "f", "src": "u", "rng": "u"},
            {"name": "g", "src": "u", "rng": "v"},
        ],
    },
    "arrow": {"vertices": ["u", "v"], "edges": [{"name": "e", "src": "u", "rng": "v"}]},
    "acyclic3": {
        "vertices": ["a", "b", "c"],
        "edges": [
            {"name": "x", "src": "a", "rng": "b"},
            {"name": "y", "src": "b", "rng": "c"},
            {"name": "z", "src": "a", "rng": "c"},
        ],
    },
}


def builtin_graph(name: str) -> Graph:
    try:
        return graph_from_dict(BUILTIN_GRAPHS[name], name=name)
    except KeyError:
        raise GraphFormatError(f"no built-in graph named {name!r}") from None


def load_graph(ref, base_dir=None) -> Graph:
    """Resolve a graph reference: a path to a graph file, or a built-in name.

    ``l2.graph`` falls back to the built-in ``l2`` when no such file exists.
    Inline dicts are accepted as well.
    """
    if isinstance(ref, Graph):
        return ref
    if isinstance(ref, dict):
        return graph_from_dict(ref)
    path = Path(ref)
    if base_dir is not None and not path.is_absolute():
        path = Path(base_dir) / path
    if path.is_file():
        return parse_graph(path.read_text(encoding="utf-8"), name=path.stem)
    stem = ref[: -len(".graph")] if ref.endswith(".graph") else ref
    if stem in BUILTIN_GRAPHS:
        return builtin_graph(stem)
    raise GraphFormatError(f"no graph file or built-in graph {ref!r}")
