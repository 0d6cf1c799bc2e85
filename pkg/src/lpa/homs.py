"""E-families, the homomorphisms they induce, and K-theory class certificates.

An E-family in a target algebra ``L_K(F)`` assigns ``p_v`` to each vertex
and ``x_e``, ``y_e`` to each edge and ghost edge of ``E`` so that the five
defining relations hold.  It then extends uniquely to an algebra map
``L_K(E) -> L_K(F)``; degrees ``(0, 1, -1)`` make the map graded and
nonzero ``p_v`` make a graded map injective.

Class certificates stand in for the module-theoretic existence steps:
an idempotent ``p`` is exhibited as an orthogonal sum of idempotents each
graded equivalent to a vertex ``w_i`` with shift ``k_i``, which pins its
class to ``sum_i t^{k_i} [w_i]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Element, LeavittPathAlgebra
from .errors import CertificateMismatch, FieldMismatch, IncompleteAssignment, NotEFamily, NotIdempotent
from .graph import Graph
from .grothendieck import GroupElement, PointedHom
from .idempotents import EquivWitness, check_orthogonal, is_homogeneous_idempotent, verify_graded_equiv
from .monoid import MonoidElement

AXIOMS = ("V", "E1", "E2", "CK1", "CK2")


@dataclass
class EFamily:
    source: Graph
    target: LeavittPathAlgebra
    vertices: dict  # v -> p_v
    edges: dict  # e -> x_e
    ghosts: dict  # e -> y_e

    def __post_init__(self):
        missing = [v for v in self.source.vertices if v not in self.vertices]
        missing += [e for e in self.source.edge_names if e not in self.edges or e not in self.ghosts]
        if missing:
            raise IncompleteAssignment(f"family has no image for {missing}")
        for el in list(self.vertices.values()) + list(self.edges.values()) + list(self.ghosts.values()):
            if el.algebra != self.target:
                raise IncompleteAssignment("family elements must all lie in the target algebra")

    @classmethod
    def canonical(cls, algebra: LeavittPathAlgebra) -> "EFamily":
        g = algebra.graph
        return cls(
            g,
            algebra,
            {v: algebra.vertex(v) for v in g.vertices},
            {e: algebra.edge(e) for e in g.edge_names},
            {e: algebra.ghost(e) for e in g.edge_names},
        )

    def p(self, v):
        return self.vertices[v]

    def x(self, e):
        return self.edges[e]

    def y(self, e):
        return self.ghosts[e]


@dataclass
class FamilyReport:
    failures: dict = field(default_factory=lambda: {a: [] for a in AXIOMS})
    instances: dict = field(default_factory=lambda: {a: 0 for a in AXIOMS})

    @property
    def passed(self) -> bool:
        return not any(self.failures.values())

    def axiom_passed(self, axiom) -> bool:
        return not self.failures[axiom]

    def __bool__(self):
        return self.passed


def check_e_family(fam: EFamily) -> FamilyReport:
    """Evaluate every instance of (V), (E1), (E2), (CK1), (CK2)."""
    E = fam.source
    zero = fam.target.zero()
    rep = FamilyReport()

    def record(axiom, ok, what):
        rep.instances[axiom] += 1
        if not ok:
            rep.failures[axiom].append(what)

    for v in E.vertices:
        for w in E.vertices:
            prod = fam.p(v) * fam.p(w)
            expected = fam.p(v) if v == w else zero
            record("V", prod == expected, f"p_{v} p_{w} = {prod}")
    for e in E.edge_names:
        s, r = E.src[e], E.rng[e]
        x, y = fam.x(e), fam.y(e)
        record("E1", fam.p(s) * x == x, f"p_{s} x_{e} != x_{e}")
        record("E1", x * fam.p(r) == x, f"x_{e} p_{r} != x_{e}")
        record("E2", fam.p(r) * y == y, f"p_{r} y_{e} != y_{e}")
        record("E2", y * fam.p(s) == y, f"y_{e} p_{s} != y_{e}")
    for e in E.edge_names:
        for f in E.edge_names:
            prod = fam.y(e) * fam.x(f)
            expected = fam.p(E.rng[e]) if e == f else zero
            record("CK1", prod == expected, f"y_{e} x_{f} = {prod}")
    for v in E.regular_vertices:
        total = zero
        for e in E.out_edges[v]:
            total = total + fam.x(e) * fam.y(e)
        record("CK2", total == fam.p(v), f"sum x_e y_e over s^-1({v}) = {total}")
    return rep


def _require_family(fam):
    rep = check_e_family(fam)
    if not rep:
        bad = {a: f for a, f in rep.failures.items() if f}
        raise NotEFamily(f"not an E-family: {bad}")


def check_graded_family(fam: EFamily) -> bool:
    _require_family(fam)
    return (
        all(p.is_homogeneous(0) for p in fam.vertices.values())
        and all(x.is_homogeneous(1) for x in fam.edges.values())
        and all(y.is_homogeneous(-1) for y in fam.ghosts.values())
    )


class ExtendedHom:
    """The algebra map determined by an E-family."""

    def __init__(self, fam: EFamily):
        self.family = fam

    def eval(self, a: Element) -> Element:
        fam = self.family
        if a.graph != fam.source:
            raise CertificateMismatch("element is not over the family's source graph")
        if a.algebra.field != fam.target.field:
            raise FieldMismatch("source and target algebras must share a field")
        tgt = fam.target
        out = tgt.zero()
        for m, c in a.terms.items():
            if not m.p and not m.q:
                img = fam.p(m.vertex)
            else:
                img = None
                for e in m.p:
                    img = fam.x(e) if img is None else img * fam.x(e)
                for e in reversed(m.q):
                    img = fam.y(e) if img is None else img * fam.y(e)
            out = out + tgt.scale(c, img)
        return out

    __call__ = eval


def extend_hom(fam: EFamily) -> ExtendedHom:
    _require_family(fam)
    return ExtendedHom(fam)


def check_unital(fam: EFamily) -> bool:
    _require_family(fam)
    total = fam.target.zero()
    for p in fam.vertices.values():
        total = total + p
    return total == fam.target.identity()


def check_injectivity_criterion(fam: EFamily) -> bool:
    """Sufficient test for injectivity of a graded map: every ``p_v`` is nonzero."""
    if not check_graded_family(fam):
        raise NotEFamily("injectivity criterion needs a graded family")
    return all(bool(p) for p in fam.vertices.values())


@dataclass
class ClassPart:
    p: Element
    witness: EquivWitness
    vertex: str


@dataclass
class ClassCertificate:
    p: Element
    claimed: GroupElement
    parts: list  # of ClassPart

    def monoid_class(self) -> MonoidElement:
        coeffs = {}
        for part in self.parts:
            key = (part.vertex, part.witness.shift)
            coeffs[key] = coeffs.get(key, 0) + 1
        return MonoidElement(self.claimed.graph, coeffs)


@dataclass(frozen=True)
class CertificateCheck:
    valid: bool
    reason: str = ""

    def __bool__(self):
        return self.valid


def verify_class_certificate(cert: ClassCertificate) -> CertificateCheck:
    alg = cert.p.algebra
    parts = cert.parts
    for i, part in enumerate(parts):
        if not is_homogeneous_idempotent(part.p):
            return CertificateCheck(False, f"NotIdempotent: part {i}")
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            if not check_orthogonal(parts[i].p, parts[j].p):
                return CertificateCheck(False, f"NotOrthogonal: parts {i} and {j}")
    total = alg.zero()
    for part in parts:
        total = total + part.p
    if total != cert.p:
        return CertificateCheck(False, f"SumMismatch: parts sum to {total}")
    for i, part in enumerate(parts):
        if not alg.graph.is_vertex(part.vertex):
            return CertificateCheck(False, f"UnknownVertex: part {i}")
        try:
            res = verify_graded_equiv(part.p, alg.vertex(part.vertex), part.witness)
        except NotIdempotent as exc:
            return CertificateCheck(False, f"NotIdempotent: {exc}")
        if not res:
            return CertificateCheck(False, f"WitnessInvalid: part {i}: {res.reason}")
    if GroupElement(cert.claimed.graph, cert.monoid_class().coeffs) != GroupElement(
        cert.claimed.graph, cert.claimed.coeffs
    ):
        return CertificateCheck(False, f"ClassMismatch: decomposition gives {cert.monoid_class()}")
    return CertificateCheck(True)


def vertex_certificate(alg: LeavittPathAlgebra, v: str) -> ClassCertificate:
    """The trivial certificate ``[v] = [v]`` (witness ``x = y = v``)."""
    p = alg.vertex(v)
    return ClassCertificate(p, GroupElement(alg.graph, {(v, 0): 1}), [ClassPart(p, EquivWitness(p, p, 0), v)])


def induced_k_map(fam: EFamily, certs: dict) -> PointedHom:
    """The map ``[v] -> [p_v]`` on graded K_0 read off from class certificates."""
    if not check_graded_family(fam):
        raise NotEFamily("induced K-map needs a graded family")
    F = fam.target.graph
    images, positivity = {}, {}
    for v in fam.source.vertices:
        if v not in certs:
            raise IncompleteAssignment(f"no class certificate for vertex {v}")
        cert = certs[v]
        if cert.p != fam.p(v):
            raise CertificateMismatch(f"certificate idempotent {cert.p} is not p_{v} = {fam.p(v)}")
        res = verify_class_certificate(cert)
        if not res:
            raise CertificateMismatch(f"certificate for {v} is invalid: {res.reason}")
        images[v] = GroupElement(F, cert.claimed.coeffs)
        positivity[v] = cert.monoid_class()
    return PointedHom(fam.source, F, images, positivity)
