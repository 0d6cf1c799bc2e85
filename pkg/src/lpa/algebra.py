"""Exact arithmetic in the Leavitt path algebra of a finite graph.

Elements are stored in the linear basis of *reduced* monomials ``p q*``:
``p`` and ``q`` are paths with a common range, and a monomial is reduced
unless ``p = p' g`` and ``q = q' g`` for the special edge ``g`` of its
source vertex.  Any product is brought back to that basis with the
Cuntz-Krieger rewrite

    p' g g* q'*  ->  p' q'*  -  sum_{e in s^-1(s(g)), e != g} p' e e* q'*

Termination: the first term is strictly shorter, and each companion term
ends in a pair ``(e, e)`` with ``e`` non-special, so it is already reduced.
Hence a monomial of total length ``n`` needs at most ``n/2`` rewrites
along the main branch; the step bound below only catches bugs.
"""

from __future__ import annotations

from collections import defaultdict
from typing import NamedTuple

from .errors import FieldMismatch, GraphMismatch, RewriteLimitExceeded
from .graph import Graph
from .scalars import QQ


class Monomial(NamedTuple):
    """``p q*`` with ``p``, ``q`` edge tuples and ``vertex = r(p) = r(q)``."""

    p: tuple
    q: tuple
    vertex: str

    @property
    def degree(self) -> int:
        return len(self.p) - len(self.q)

    def star(self) -> "Monomial":
        return Monomial(self.q, self.p, self.vertex)


class LeavittPathAlgebra:
    """The algebra L_K(E) of a finite graph ``E`` over an exact field ``K``."""

    def __init__(self, graph: Graph, field=QQ):
        self.graph = graph
        self.field = field
        self.zero_scalar = field(0)
        self.one_scalar = field(1)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, LeavittPathAlgebra):
            return NotImplemented
        return self.graph == other.graph and self.field == other.field

    def __hash__(self):
        return hash((self.graph, self.field))

    def __repr__(self):
        return f"L_{self.field!r}({self.graph!r})"

    # -- path helpers ---------------------------------------------------

    def path_source(self, path, vertex):
        return self.graph.src[path[0]] if path else vertex

    def is_reduced(self, m: Monomial) -> bool:
        if not (m.p and m.q) or m.p[-1] != m.q[-1]:
            return True
        last = m.p[-1]
        return self.graph.special[self.graph.src[last]] != last

    def sort_key(self, m: Monomial):
        ei = self.graph.edge_index
        return (
            m.degree,
            tuple(ei[e] for e in m.p),
            tuple(ei[e] for e in m.q),
            self.graph.vertex_index[m.vertex],
        )

    # -- constructors ---------------------------------------------------

    def element(self, terms) -> "Element":
        """Normalize an iterable of ``(Monomial, scalar)`` pairs."""
        return Element(self, self._reduce(terms))

    def zero(self) -> "Element":
        return Element(self, {})

    def scalar(self, k) -> "Element":
        return self.scale(k, self.identity())

    def vertex(self, v) -> "Element":
        return Element(self, {Monomial((), (), v): self.one_scalar})

    def edge(self, e) -> "Element":
        return Element(self, {Monomial((e,), (), self.graph.rng[e]): self.one_scalar})

    def ghost(self, e) -> "Element":
        return Element(self, {Monomial((), (e,), self.graph.rng[e]): self.one_scalar})

    def path(self, edges) -> "Element":
        edges = tuple(edges)
        return self.monomial(edges, (), self.graph.rng[edges[-1]])

    def monomial(self, p, q, vertex=None, coeff=1) -> "Element":
        p, q = tuple(p), tuple(q)
        if vertex is None:
            vertex = self.graph.rng[(p or q)[-1]]
        return self.element([(Monomial(p, q, vertex), self.field(coeff))])

    def identity(self) -> "Element":
        one = self.one_scalar
        return Element(self, {Monomial((), (), v): one for v in self.graph.vertices})

    # -- arithmetic kernels ---------------------------------------------

    def _reduce(self, terms) -> dict:
        g = self.graph
        out = defaultdict(lambda: self.zero_scalar)
        stack = [(m, self.field(c)) for m, c in terms]
        steps = 0
        limit = 64 + 4 * sum(len(m.p) + len(m.q) + 1 for m, _ in stack)
        while stack:
            m, c = stack.pop()
            if not c:
                continue
            p, q = m.p, m.q
            if p and q and p[-1] == q[-1] and g.special[g.src[p[-1]]] == p[-1]:
                steps += 1
                if steps > limit:
                    raise RewriteLimitExceeded(f"normal form did not terminate for {m}")
                gamma = p[-1]
                u = g.src[gamma]
                p2, q2 = p[:-1], q[:-1]
                stack.append((Monomial(p2, q2, u), c))
                for e in g.out_edges[u]:
                    if e != gamma:
                        out[Monomial(p2 + (e,), q2 + (e,), g.rng[e])] -= c
            else:
                out[m] += c
        return {m: c for m, c in out.items() if c}

    def _mono_product(self, a: Monomial, b: Monomial):
        """Product of two monomials as a monomial (not yet reduced) or None."""
        q, r = a.q, b.p
        g = self.graph
        qs = g.src[q[0]] if q else a.vertex
        rs = g.src[r[0]] if r else b.vertex
        if qs != rs:
            return None
        if len(q) <= len(r):
            if r[: len(q)] != q:
                return None
            return Monomial(a.p + r[len(q):], b.q, b.vertex)
        if q[: len(r)] != r:
            return None
        return Monomial(a.p, b.q + q[len(r):], a.vertex)

    def _check(self, a, b):
        if a.algebra is b.algebra:
            return
        if a.algebra.graph != b.algebra.graph:
            raise GraphMismatch("elements belong to algebras of different graphs")
        if a.algebra.field != b.algebra.field:
            raise FieldMismatch(f"fields differ: {a.algebra.field!r} vs {b.algebra.field!r}")

    def add(self, a: "Element", b: "Element") -> "Element":
        self._check(a, b)
        out = dict(a.terms)
        for m, c in b.terms.items():
            s = out.get(m, self.zero_scalar) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Element(self, out)

    def scale(self, k, a: "Element") -> "Element":
        k = self.field(k)
        if not k:
            return self.zero()
        return Element(self, {m: k * c for m, c in a.terms.items()})

    def multiply(self, a: "Element", b: "Element") -> "Element":
        self._check(a, b)
        raw = defaultdict(lambda: self.zero_scalar)
        for ma, ca in a.terms.items():
            for mb, cb in b.terms.items():
                m = self._mono_product(ma, mb)
                if m is not None:
                    raw[m] += ca * cb
        return Element(self, self._reduce(raw.items()))

    def involution(self, a: "Element") -> "Element":
        return Element(self, self._reduce((m.star(), c) for m, c in a.terms.items()))


class Element:
    """An element of a Leavitt path algebra in canonical normal form.

    ``terms`` maps reduced monomials to nonzero scalars.  Instances are
    treated as immutable; arithmetic operators return new elements.
    """

    __slots__ = ("algebra", "terms", "_key")

    def __init__(self, algebra: LeavittPathAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = terms
        self._key = None

    @property
    def graph(self) -> Graph:
        return self.algebra.graph

    def sorted_terms(self):
        key = self.algebra.sort_key
        return sorted(self.terms.items(), key=lambda mc: key(mc[0]))

    def _canonical(self):
        if self._key is None:
            self._key = tuple(self.sorted_terms())
        return self._key

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.algebra == other.algebra and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(self._canonical())

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        return self.algebra.add(self, self._lift(other))

    __radd__ = __add__

    def __neg__(self):
        return self.algebra.scale(-1, self)

    def __sub__(self, other):
        return self.algebra.add(self, -self._lift(other))

    def __rsub__(self, other):
        return self.algebra.add(self._lift(other), -self)

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.algebra.multiply(self, other)
        return self.algebra.scale(other, self)

    def __rmul__(self, other):
        return self.algebra.scale(other, self)

    def _lift(self, other):
        if isinstance(other, Element):
            return other
        return self.algebra.scalar(other)

    def star(self) -> "Element":
        return self.algebra.involution(self)

    def degree_components(self) -> dict:
        comps = defaultdict(dict)
        for m, c in self.terms.items():
            comps[m.degree][m] = c
        return {n: Element(self.algebra, t) for n, t in sorted(comps.items())}

    def degrees(self) -> set:
        return {m.degree for m in self.terms}

    def degree(self):
        """The degree if the element is homogeneous and nonzero, else ``None``."""
        ds = self.degrees()
        return ds.pop() if len(ds) == 1 else None

    def is_homogeneous(self, n=None) -> bool:
        ds = self.degrees()
        if not ds:
            return True
        return len(ds) == 1 and (n is None or n in ds)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"Element({format_element(self)!r})"


def format_monomial(m: Monomial) -> str:
    if not m.p and not m.q:
        return m.vertex
    return " ".join(list(m.p) + [f"{e}*" for e in reversed(m.q)])


def format_element(a: Element) -> str:
    fmt = a.algebra.field.format
    if not a.terms:
        return "0"
    parts = []
    for i, (m, c) in enumerate(a.sorted_terms()):
        s = fmt(c)
        neg = s.startswith("-")
        if neg:
            s = s[1:]
        body = format_monomial(m) if s == "1" else f"{s} {format_monomial(m)}"
        if i == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


# module-level aliases matching the operation names
def add(a: Element, b: Element) -> Element:
    return a.algebra.add(a, b)


def scale(k, a: Element) -> Element:
    return a.algebra.scale(k, a)


def multiply(a: Element, b: Element) -> Element:
    return a.algebra.multiply(a, b)


def involution(a: Element) -> Element:
    return a.algebra.involution(a)


def degree_components(a: Element) -> dict:
    return a.degree_components()


def identity(g: Graph, field=QQ) -> Element:
    return LeavittPathAlgebra(g, field).identity()
