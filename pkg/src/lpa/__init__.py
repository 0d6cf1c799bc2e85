"""Leavitt path algebras: normal forms, graded K-theory and certificate checks."""

from .algebra import Element, LeavittPathAlgebra, Monomial
from .graph import Edge, Graph, builtin_graph, load_graph, parse_graph
from .grothendieck import GroupElement, group_equal, k0_t1
from .monoid import MonoidElement, monoid_distinct, monoid_equal
from .parsing import parse_element
from .report import Report, Verdict
from .scalars import QQ, PrimeField, field_from_spec

__all__ = [
    "Edge", "Element", "Graph", "GroupElement", "LeavittPathAlgebra", "Monomial", "MonoidElement",
    "PrimeField", "QQ", "Report", "Verdict", "builtin_graph", "field_from_spec", "group_equal",
    "k0_t1", "load_graph", "monoid_distinct", "monoid_equal", "parse_element", "parse_graph",
]
