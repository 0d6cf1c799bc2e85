"""The talented monoid of a finite graph.

Elements are finite sums ``sum n_(v,k) t^k [v]`` with positive integer
coefficients, subject to ``[v] = sum_{e in s^-1(v)} t [r(e)]`` at every
regular vertex.  ``t`` acts by shifting exponents.

Equality search
---------------
Two elements are equal iff they have a common descendant under
expansions (confluence of the defining relations).  The monoid is also
cancellative, so the common part of the two sides can be dropped at any
time.  :func:`monoid_equal` alternates: cancel the common part, then
expand *every* regular term sitting at the lowest exponent ``K`` on
either side.  Expansion is additive, so after all levels below ``N`` have
been processed the two sides differ from their full level-``N``
expansions by the same multiset; once ``N`` exceeds the exponents of a
common descendant the sides coincide.  The search is therefore complete
for equal inputs; for unequal inputs it runs until the node budget is
spent.  It never answers "not equal": inequality is certified only by
:func:`monoid_distinct`.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import AbsentTerm, GraphMismatch, SinkNotExpandable
from .graph import Graph, incidence_matrix
from .intlinalg import LatticeQuotient, QuotientClass
from .parsing import parse_laurent_terms

DEFAULT_SPEC_SET = (-2, -1, 0, 2, 3)


def default_budget() -> int:
    return int(os.environ.get("LPA_DEFAULT_BUDGET", "10000"))


class LaurentCombination:
    """A finitely supported map ``(vertex, exponent) -> int`` over a graph."""

    __slots__ = ("graph", "coeffs")

    def __init__(self, graph: Graph, coeffs=None):
        self.graph = graph
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if c}

    @classmethod
    def generator(cls, graph, v, k=0, n=1):
        return cls(graph, {(v, k): n})

    def _same(self, other):
        if self.graph != other.graph:
            raise GraphMismatch("elements live over different graphs")

    def __eq__(self, other):
        if not isinstance(other, LaurentCombination):
            return NotImplemented
        return self.graph == other.graph and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        self._same(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return type(self)(self.graph, out)

    def shift(self, n: int = 1):
        """Multiply by ``t^n``."""
        return type(self)(self.graph, {(v, k + n): c for (v, k), c in self.coeffs.items()})

    def exponents(self):
        return {k for (_, k) in self.coeffs}

    def min_exponent(self):
        return min(self.exponents(), default=0)

    def sorted_items(self):
        vi = self.graph.vertex_index
        return sorted(self.coeffs.items(), key=lambda kv: (kv[0][1], vi[kv[0][0]]))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, ((v, k), c) in enumerate(self.sorted_items()):
            t = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            mag = abs(c)
            body = f"{'' if mag == 1 else mag}{t}[{v}]"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"


class MonoidElement(LaurentCombination):
    """An element of the talented monoid; all coefficients are positive."""

    def __init__(self, graph, coeffs=None):
        super().__init__(graph, coeffs)
        if any(c < 0 for c in self.coeffs.values()):
            raise ValueError("monoid coefficients must be positive")


def parse_monoid_element(text: str, g: Graph) -> MonoidElement:
    return MonoidElement(g, parse_laurent_terms(text, g, signed=False))


def _expand(coeffs: dict, g: Graph, site, count: int):
    v, k = site
    have = coeffs.get(site, 0)
    if have < count or count < 1:
        raise AbsentTerm(f"t^{k}[{v}] occurs {have} times, cannot expand {count}")
    if g.is_sink(v):
        raise SinkNotExpandable(f"{v} is a sink")
    if have == count:
        del coeffs[site]
    else:
        coeffs[site] = have - count
    for e in g.out_edges[v]:
        child = (g.rng[e], k + 1)
        coeffs[child] = coeffs.get(child, 0) + count


def expand_once(m: MonoidElement, at) -> MonoidElement:
    """Replace one copy of ``t^k [v]`` by ``sum_e t^(k+1) [r(e)]``."""
    coeffs = dict(m.coeffs)
    _expand(coeffs, m.graph, tuple(at), 1)
    return MonoidElement(m.graph, coeffs)


def expand(m: MonoidElement, at, count: int = 1) -> MonoidElement:
    coeffs = dict(m.coeffs)
    _expand(coeffs, m.graph, tuple(at), count)
    return MonoidElement(m.graph, coeffs)


@dataclass(frozen=True)
class ExpansionStep:
    side: str  # "a" or "b"
    vertex: str
    exponent: int
    count: int


@dataclass
class MonoidEquality:
    verdict: str  # "Equal" or "Unknown"
    trace: list = field(default_factory=list)
    common: MonoidElement | None = None
    nodes: int = 0
    budget: int = 0
    reason: str = ""

    @property
    def equal(self) -> bool:
        return self.verdict == "Equal"

    @property
    def depth(self) -> int:
        """Largest ``|k|`` over expanded sites: the Laurent window the trace needs."""
        return max((abs(s.exponent) for s in self.trace), default=0)

    @property
    def expansions(self) -> int:
        """Single expansions performed, counting multiplicity."""
        return sum(s.count for s in self.trace)


def replay(a: MonoidElement, b: MonoidElement, trace) -> tuple:
    ca, cb = dict(a.coeffs), dict(b.coeffs)
    for s in trace:
        _expand(ca if s.side == "a" else cb, a.graph, (s.vertex, s.exponent), s.count)
    return MonoidElement(a.graph, ca), MonoidElement(b.graph, cb)


def monoid_equal(a: MonoidElement, b: MonoidElement, budget: int | None = None) -> MonoidEquality:
    """Search for a common descendant of ``a`` and ``b``.

    ``budget`` bounds the number of expanded sites (nodes).  An ``Equal``
    answer carries a trace that is replayed before it is returned.
    """
    if a.graph != b.graph:
        raise GraphMismatch("elements live over different graphs")
    g = a.graph
    budget = default_budget() if budget is None else budget
    x, y = dict(a.coeffs), dict(b.coeffs)
    trace = []
    nodes = 0

    def cancel():
        for key in set(x) & set(y):
            c = min(x[key], y[key])
            for d in (x, y):
                d[key] -= c
                if not d[key]:
                    del d[key]

    cancel()
    while x or y:
        levels = [k for (v, k) in list(x) + list(y) if g.is_regular(v)]
        if not levels:
            return MonoidEquality("Unknown", trace, None, nodes, budget,
                                  reason="no expandable terms left on either side")
        level = min(levels)
        for side, d in (("a", x), ("b", y)):
            for (v, k) in sorted((s for s in d if s[1] == level and g.is_regular(s[0])),
                                 key=lambda s: g.vertex_index[s[0]]):
                if nodes >= budget:
                    return MonoidEquality("Unknown", trace, None, nodes, budget,
                                          reason="node budget exhausted")
                count = d[(v, k)]
                _expand(d, g, (v, k), count)
                trace.append(ExpansionStep(side, v, k, count))
                nodes += 1
        cancel()
    ra, rb = replay(a, b, trace)
    if ra != rb:
        raise AssertionError("equality trace failed to replay (bug)")
    return MonoidEquality("Equal", trace, ra, nodes, budget)


@lru_cache(maxsize=256)
def relation_quotient(g: Graph, m: int) -> LatticeQuotient:
    """``Z^{E^0}`` modulo ``v - m * sum_w A[v][w] w`` for regular ``v``."""
    a = incidence_matrix(g)
    n = len(g.vertices)
    rows = []
    for v in g.regular_vertices:
        i = g.vertex_index[v]
        rows.append([int(i == j) - m * int(a[i, j]) for j in range(n)])
    return LatticeQuotient(rows, n)


def specialize(a: LaurentCombination, m: int, shift: int = 0) -> QuotientClass:
    """Image of ``t^shift * a`` under ``t -> m``, ``[v] -> v`` in the relation quotient.

    Equal elements have equal images provided every exponent of
    ``t^shift * a`` (and of the expansions relating them) is nonnegative;
    for ``m = +-1`` any exponent is allowed.
    """
    g = a.graph
    vec = [0] * len(g.vertices)
    for (v, k), c in a.coeffs.items():
        e = k + shift
        if e < 0 and m not in (1, -1):
            raise ValueError(f"exponent {e} cannot be specialized at t = {m}; shift first")
        if e < 0:
            term = m ** (-e)  # m = +-1 is its own inverse
        else:
            term = m ** e
        vec[g.vertex_index[v]] += c * term
    return relation_quotient(g, m).classify(vec)


def common_shift(*elems) -> int:
    return max(0, -min((e.min_exponent() for e in elems), default=0))


@dataclass(frozen=True)
class Distinctness:
    verdict: str  # "Distinct" or "Unknown"
    witness: int | None = None
    images: tuple = ()
    shift: int = 0

    @property
    def distinct(self) -> bool:
        return self.verdict == "Distinct"


def monoid_distinct(a: LaurentCombination, b: LaurentCombination, spec_set=DEFAULT_SPEC_SET) -> Distinctness:
    """Certify ``a != b`` by a specialization ``t -> m`` that separates them."""
    if a.graph != b.graph:
        raise GraphMismatch("elements live over different graphs")
    s = common_shift(a, b)
    for m in spec_set:
        ia, ib = specialize(a, m, s), specialize(b, m, s)
        if ia != ib:
            return Distinctness("Distinct", m, (ia, ib), s)
    return Distinctness("Unknown", shift=s)
