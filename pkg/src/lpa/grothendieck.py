"""The graded Grothendieck group of a graph as a pointed pre-ordered module.

``G`` is the group completion of the talented monoid: the free
``Z[t, 1/t]``-module on the vertices modulo ``[v] - t sum_w A[v][w] [w]``
for regular ``v``.  Equality is decided up to a Laurent degree window
(membership of ``a - b`` in the relation submodule with multipliers
supported on ``[-D, D]``), inequality through specializations, and
positivity through monoid certificates.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GraphMismatch, IncompleteAssignment
from .graph import Graph, incidence_matrix
from .intlinalg import solve_integer
from .monoid import (
    DEFAULT_SPEC_SET,
    LaurentCombination,
    MonoidElement,
    monoid_distinct,
    relation_quotient,
)
from .parsing import parse_laurent_terms
from .report import Verdict, combine

DEFAULT_WINDOW = 8


class GroupElement(LaurentCombination):
    """An element of the graded Grothendieck group (signed coefficients)."""

    def __neg__(self):
        return GroupElement(self.graph, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-GroupElement(other.graph, other.coeffs))

    def scale(self, n: int) -> "GroupElement":
        return GroupElement(self.graph, {k: n * c for k, c in self.coeffs.items()})

    def times(self, poly: dict) -> "GroupElement":
        """Multiply by the Laurent polynomial ``sum_j poly[j] t^j``."""
        out = GroupElement(self.graph)
        for j, c in poly.items():
            out = out + self.shift(j).scale(c)
        return out


def embed(m: LaurentCombination) -> GroupElement:
    return GroupElement(m.graph, m.coeffs)


def parse_group_element(text: str, g: Graph) -> GroupElement:
    return GroupElement(g, parse_laurent_terms(text, g, signed=True))


@dataclass(frozen=True)
class GroupPresentation:
    graph: Graph
    generators: tuple
    relations: dict  # regular vertex -> GroupElement

    def __str__(self):
        rels = ", ".join(f"{r}" for r in self.relations.values())
        return f"<{', '.join(f'[{v}]' for v in self.generators)} | {rels}>"


def relation(g: Graph, v: str) -> GroupElement:
    a = incidence_matrix(g)
    i = g.vertex_index[v]
    coeffs = {(v, 0): 1}
    for j, w in enumerate(g.vertices):
        if a[i, j]:
            coeffs[(w, 1)] = coeffs.get((w, 1), 0) - int(a[i, j])
    return GroupElement(g, coeffs)


def group_presentation(g: Graph) -> GroupPresentation:
    return GroupPresentation(g, g.vertices, {v: relation(g, v) for v in g.regular_vertices})


def order_unit(g: Graph) -> GroupElement:
    return GroupElement(g, {(v, 0): 1 for v in g.vertices})


@dataclass
class GroupEquality:
    verdict: str  # "Equal" or "Unknown"
    multipliers: dict = field(default_factory=dict)  # v -> {exponent: coeff}
    window: int = DEFAULT_WINDOW

    @property
    def equal(self) -> bool:
        return self.verdict == "Equal"


def combination(g: Graph, multipliers: dict) -> GroupElement:
    """``sum_v f_v(t) * relation_v``."""
    out = GroupElement(g)
    for v, poly in multipliers.items():
        out = out + relation(g, v).times(poly)
    return out


def group_equal(a: LaurentCombination, b: LaurentCombination, window: int = DEFAULT_WINDOW) -> GroupEquality:
    """Decide whether ``a - b`` lies in the relation submodule with multipliers in ``[-D, D]``."""
    if a.graph != b.graph:
        raise GraphMismatch("elements live over different graphs")
    g = a.graph
    diff = embed(a) - embed(b)
    if not diff:
        return GroupEquality("Equal", {}, window)
    cols = [(v, j) for v in g.regular_vertices for j in range(-window, window + 1)]
    rels = {v: relation(g, v) for v in g.regular_vertices}
    col_vectors = [rels[v].shift(j).coeffs for v, j in cols]
    row_keys = set(diff.coeffs)
    for cv in col_vectors:
        row_keys.update(cv)
    vi = g.vertex_index
    row_keys = sorted(row_keys, key=lambda key: (key[1], vi[key[0]]))
    matrix = [[cv.get(key, 0) for cv in col_vectors] for key in row_keys]
    rhs = [diff.coeffs.get(key, 0) for key in row_keys]
    sol = solve_integer(matrix, rhs) if cols else None
    if sol is None:
        return GroupEquality("Unknown", {}, window)
    mult = {}
    for (v, j), c in zip(cols, sol):
        if c:
            mult.setdefault(v, {})[j] = c
    if combination(g, mult) != diff:
        raise AssertionError("group_equal multipliers failed substitution (bug)")
    return GroupEquality("Equal", mult, window)


def group_verdict(a, b, window=DEFAULT_WINDOW, spec_set=DEFAULT_SPEC_SET):
    """Pass if equal within the window, Fail if a specialization separates them."""
    eq = group_equal(a, b, window)
    if eq.equal:
        return Verdict.PASS, eq
    dist = monoid_distinct(a, b, spec_set)
    if dist.distinct:
        return Verdict.FAIL, dist
    return Verdict.UNKNOWN, eq


def check_positive(a: LaurentCombination, cert: MonoidElement | None, window: int = DEFAULT_WINDOW) -> str:
    """``Positive`` when the monoid certificate equals ``a`` in the group."""
    if cert is None:
        return "Unknown"
    if a.graph != cert.graph:
        raise GraphMismatch("certificate lives over a different graph")
    return "Positive" if group_equal(a, embed(cert), window).equal else "Unknown"


@dataclass
class PointedHom:
    """A candidate morphism of pointed pre-ordered modules ``G_E -> G_F``."""

    source: Graph
    target: Graph
    images: dict  # source vertex -> GroupElement over target
    certs: dict = field(default_factory=dict)  # source vertex -> MonoidElement over target

    def apply(self, x: LaurentCombination) -> GroupElement:
        self._require_total()
        out = GroupElement(self.target)
        for (v, k), c in x.coeffs.items():
            out = out + self.images[v].shift(k).scale(c)
        return out

    def _require_total(self):
        missing = [v for v in self.source.vertices if v not in self.images]
        if missing:
            raise IncompleteAssignment(f"no image for source vertices {missing}")


@dataclass
class HomCheck:
    well_defined: Verdict
    order_preserving: Verdict
    unit_preserving: Verdict
    details: dict = field(default_factory=dict)

    @property
    def verdict(self) -> Verdict:
        return combine([self.well_defined, self.order_preserving, self.unit_preserving])


def check_pog_hom(h: PointedHom, window: int = DEFAULT_WINDOW, spec_set=DEFAULT_SPEC_SET) -> HomCheck:
    """Validate a pointed homomorphism on generators.

    Order preservation is checked on the generators ``[v]`` only: the
    positive cone is generated by the ``t^k [v]`` and ``t`` preserves it.
    """
    h._require_total()
    details = {"well_defined": {}, "order_preserving": {}, "unit_preserving": ""}

    wd = []
    for v, rel in group_presentation(h.source).relations.items():
        verdict, _ = group_verdict(h.apply(rel), GroupElement(h.target), window, spec_set)
        wd.append(verdict)
        details["well_defined"][v] = verdict.value
    op = []
    for v in h.source.vertices:
        res = check_positive(h.images[v], h.certs.get(v), window)
        verdict = Verdict.PASS if res == "Positive" else Verdict.UNKNOWN
        op.append(verdict)
        details["order_preserving"][v] = verdict.value
    unit, _ = group_verdict(h.apply(order_unit(h.source)), order_unit(h.target), window, spec_set)
    details["unit_preserving"] = unit.value
    return HomCheck(combine(wd), combine(op), unit, details)


@dataclass(frozen=True)
class AbelianGroup:
    torsion: tuple
    free_rank: int

    @property
    def trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0

    def __str__(self):
        parts = [f"Z/{d}" for d in self.torsion] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"


def k0_t1(g: Graph) -> AbelianGroup:
    """The ungraded K_0: cokernel of ``v - sum_w A[v][w] w`` over regular ``v``."""
    q = relation_quotient(g, 1)
    return AbelianGroup(q.torsion, q.free_rank)
