"""Checks for when two graded maps induce the same map on graded K_0.

For graded homomorphisms ``phi, psi: L_K(E) -> L_K(F)`` of finite graphs the
following are verified from supplied data:

* ``cond2``: ``phi(v) ~ psi(v)`` and ``phi(ee*) ~ psi(ee*)`` in degree 0;
* ``cond4`` (``plus``): one pair ``x, y`` of degree 0 with ``xy = phi(1)``,
  ``yx = psi(1)`` and ``x psi(v) y = phi(v)`` (and ``x psi(ee*) y = phi(ee*)``);
* ``cond5`` (``plus``): a degree-0 unit ``z`` with ``z psi(v) z^-1 = phi(v)``
  (and on every ``ee*``); without ``plus`` this is local equality.

:func:`assemble_global_witness` builds the ``cond4`` pair from per-edge and
per-sink witnesses.  No unit ``z`` is ever synthesized; it must be supplied.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Element, LeavittPathAlgebra
from .errors import AssemblyAssertionFailed, DegreeViolation, GraphMismatch, MissingWitness, NotEFamily, NotInvertible
from .graph import builtin_graph
from .grothendieck import group_equal
from .homs import EFamily, check_e_family, check_graded_family, extend_hom, induced_k_map, vertex_certificate
from .idempotents import check_equiv_degree_zero
from .report import Report, Verdict


@dataclass
class HomPair:
    phi: EFamily
    psi: EFamily

    def __post_init__(self):
        if self.phi.source != self.psi.source or self.phi.target != self.psi.target:
            raise GraphMismatch("phi and psi need a common source and target")
        for name, fam in (("phi", self.phi), ("psi", self.psi)):
            rep = check_e_family(fam)
            if not rep:
                raise NotEFamily(f"{name} is not an E-family: { {a: f for a, f in rep.failures.items() if f} }")
            if not check_graded_family(fam):
                raise NotEFamily(f"{name} is not graded")
        self.phi_hom = extend_hom(self.phi)
        self.psi_hom = extend_hom(self.psi)

    @property
    def source(self):
        return self.phi.source

    @property
    def target(self) -> LeavittPathAlgebra:
        return self.phi.target

    def items(self):
        """``(label, phi(item), psi(item))`` for every vertex and every ``ee*``."""
        E = self.source
        out = [(v, self.phi.p(v), self.psi.p(v)) for v in E.vertices]
        for e in E.edge_names:
            out.append((f"{e}{e}*", self.phi.x(e) * self.phi.y(e), self.psi.x(e) * self.psi.y(e)))
        return out

    def phi_one(self):
        return _sum(self.target, self.phi.vertices.values())

    def psi_one(self):
        return _sum(self.target, self.psi.vertices.values())


@dataclass
class Conjugator:
    z: Element
    z_inv: Element


def _sum(alg, elems):
    total = alg.zero()
    for el in elems:
        total = total + el
    return total


def _edge_item(e):
    return f"{e}{e}*"


def check_cond2(hp: HomPair, vertex_wits: dict, edge_wits: dict) -> Report:
    """Per-item degree-0 equivalences ``x y = phi(.)``, ``y x = psi(.)``."""
    rep = Report("faithful cond2")
    E = hp.source
    for v in E.vertices:
        if v not in vertex_wits:
            raise MissingWitness(f"no witness for vertex {v}")
    for e in E.edge_names:
        if e not in edge_wits:
            raise MissingWitness(f"no witness for edge {e}")
    for v in E.vertices:
        x, y = vertex_wits[v]
        _cond2_item(rep, v, hp.phi.p(v), hp.psi.p(v), x, y)
    for e in E.edge_names:
        x, y = edge_wits[e]
        _cond2_item(rep, _edge_item(e), hp.phi.x(e) * hp.phi.y(e), hp.psi.x(e) * hp.psi.y(e), x, y)
    return rep.finalize()


def _cond2_item(rep, label, p, q, x, y):
    if not (x.is_homogeneous(0) and y.is_homogeneous(0)):
        rep.add(label, Verdict.FAIL, "DegreeViolation: witnesses must have degree 0")
        return
    res = check_equiv_degree_zero(p, q, x, y)
    rep.add(label, Verdict.of(res.valid), res.reason)


def derived_vertex_witnesses(hp: HomPair, edge_wits: dict, sink_wits: dict) -> dict:
    """``x_v = sum x_e``, ``y_v = sum y_e`` over ``s^-1(v)``; sinks use the supplied pair."""
    E = hp.source
    alg = hp.target
    out = {}
    for v in E.vertices:
        if E.is_regular(v):
            out[v] = (
                _sum(alg, (edge_wits[e][0] for e in E.out_edges[v])),
                _sum(alg, (edge_wits[e][1] for e in E.out_edges[v])),
            )
        else:
            if v not in sink_wits:
                raise MissingWitness(f"no witness for sink {v}")
            out[v] = sink_wits[v]
    return out


def assemble_global_witness(hp: HomPair, edge_wits: dict, sink_wits: dict) -> tuple:
    """Glue per-edge and per-sink witnesses into one degree-0 pair ``(x, y)``.

    Every identity the gluing relies on is checked; the first one that
    fails raises :class:`AssemblyAssertionFailed`.
    """
    E = hp.source
    alg = hp.target
    for e in E.edge_names:
        if e not in edge_wits:
            raise MissingWitness(f"no witness for edge {e}")
    local = derived_vertex_witnesses(hp, edge_wits, sink_wits)
    pre = Report("pre")
    for e in E.edge_names:
        x, y = edge_wits[e]
        _cond2_item(pre, _edge_item(e), hp.phi.x(e) * hp.phi.y(e), hp.psi.x(e) * hp.psi.y(e), x, y)
    for v in E.sinks:
        x, y = local[v]
        _cond2_item(pre, v, hp.phi.p(v), hp.psi.p(v), x, y)
    for c in pre.checks:
        if c.verdict != Verdict.PASS:
            raise AssemblyAssertionFailed(f"witness for {c.name} does not realize the equivalence: {c.detail}")

    def need(ok, what):
        if not ok:
            raise AssemblyAssertionFailed(what)

    for v in E.vertices:
        xv, yv = local[v]
        need(xv * yv == hp.phi.p(v), f"x_{v} y_{v} != phi({v})")
        need(yv * xv == hp.psi.p(v), f"y_{v} x_{v} != psi({v})")
        for w in E.vertices:
            if w != v:
                need(not (xv * local[w][1]), f"x_{v} y_{w} != 0")
                need(not (yv * local[w][0]), f"y_{v} x_{w} != 0")
    x = _sum(alg, (local[v][0] for v in E.vertices))
    y = _sum(alg, (local[v][1] for v in E.vertices))
    rep = check_cond4(hp, x, y, plus=True)
    for c in rep.checks:
        need(c.verdict == Verdict.PASS, f"assembled pair fails {c.name}")
    return x, y


def check_cond4(hp: HomPair, x: Element, y: Element, plus: bool = False) -> Report:
    if not (x.is_homogeneous(0) and y.is_homogeneous(0)):
        raise DegreeViolation("x and y must have degree 0")
    rep = Report("faithful cond4" + ("+" if plus else ""))
    rep.add("xy = phi(1)", x * y == hp.phi_one())
    rep.add("yx = psi(1)", y * x == hp.psi_one())
    for label, ph, ps in hp.items():
        if label in hp.source.vertex_index or plus:
            rep.add(f"x psi({label}) y = phi({label})", x * ps * y == ph)
    return rep.finalize()


def _require_unit(hp: HomPair, z: Conjugator):
    one = hp.target.identity()
    if not (z.z.is_homogeneous(0) and z.z_inv.is_homogeneous(0)):
        raise DegreeViolation("conjugator must have degree 0")
    if z.z * z.z_inv != one or z.z_inv * z.z != one:
        raise NotInvertible("z * z_inv and z_inv * z must both be the identity")


def check_cond5(hp: HomPair, z: Conjugator, plus: bool = False) -> Report:
    _require_unit(hp, z)
    rep = Report("faithful cond5" + ("+" if plus else ""))
    for label, ph, ps in hp.items():
        if label in hp.source.vertex_index or plus:
            rep.add(f"z psi({label}) z^-1 = phi({label})", z.z * ps * z.z_inv == ph)
    return rep.finalize()


def check_edge_conjugation(hp: HomPair, z: Conjugator) -> Report:
    """The strictly stronger requirement ``z psi(e) z^-1 = phi(e)`` on edges."""
    _require_unit(hp, z)
    rep = Report("faithful edges")
    for e in hp.source.edge_names:
        lhs = z.z * hp.psi.x(e) * z.z_inv
        rhs = hp.phi.x(e)
        rep.add(f"z psi({e}) z^-1 = phi({e})", lhs == rhs, "" if lhs == rhs else f"{lhs} != {rhs}")
    return rep.finalize()


def witnesses_from_conjugator(hp: HomPair, z: Conjugator) -> dict:
    """``x_v = z psi(v)``, ``y_v = z^-1`` realize ``phi(v) ~ psi(v)`` when cond5 holds."""
    return {v: (z.z * hp.psi.p(v), z.z_inv) for v in hp.source.vertices}


def k_maps_agree(hp: HomPair, phi_certs=None, psi_certs=None, window: int = 4) -> bool:
    """Compare the induced maps on generators (trivial certificates by default)."""
    alg = hp.target
    default = {v: vertex_certificate(alg, v) for v in alg.graph.vertices}
    phi_certs = phi_certs or {v: default[v] for v in hp.source.vertices}
    psi_certs = psi_certs or {v: default[v] for v in hp.source.vertices}
    f = induced_k_map(hp.phi, phi_certs)
    g = induced_k_map(hp.psi, psi_certs)
    return all(group_equal(f.images[v], g.images[v], window).equal for v in hp.source.vertices)


# -- the worked example -----------------------------------------------------

EXAMPLE_W = "e f* + f e* + g g* + v"


def example42_data(field=None):
    """Graph, algebra, ``phi = id`` and ``psi`` swapping the loops ``e`` and ``f``."""
    from .parsing import parse_element

    g = builtin_graph("ex42")
    alg = LeavittPathAlgebra(g) if field is None else LeavittPathAlgebra(g, field)
    phi = EFamily.canonical(alg)
    swap = {"e": "f", "f": "e", "g": "g"}
    psi = EFamily(
        g,
        alg,
        {v: alg.vertex(v) for v in g.vertices},
        {e: alg.edge(swap[e]) for e in g.edge_names},
        {e: alg.ghost(swap[e]) for e in g.edge_names},
    )
    w = parse_element(EXAMPLE_W, alg)
    edge_wits = {
        "e": (parse_element("e f*", alg), parse_element("f e*", alg)),
        "f": (parse_element("f e*", alg), parse_element("e f*", alg)),
        "g": (parse_element("g g*", alg), parse_element("g g*", alg)),
    }
    sink_wits = {"v": (alg.vertex("v"), alg.vertex("v"))}
    return {"graph": g, "algebra": alg, "phi": phi, "psi": psi, "w": w,
            "edge_wits": edge_wits, "sink_wits": sink_wits}


def example42_demo(psi: EFamily | None = None, z: Element | None = None,
                   edge_wits=None, sink_wits=None, field=None) -> Report:
    """Run the seven checks of the loop-swap example.

    Defaults reproduce the example; passing ``psi`` (and matching ``z`` and
    witnesses) reruns the same checks on variants.
    """
    d = example42_data(field)
    alg = d["algebra"]
    phi = d["phi"]
    if psi is None:
        psi = d["psi"]
        z = d["w"] if z is None else z
        edge_wits = d["edge_wits"] if edge_wits is None else edge_wits
    else:
        z = alg.identity() if z is None else z
        edge_wits = edge_wits or {e: (psi.x(e) * psi.y(e),) * 2 for e in alg.graph.edge_names}
    sink_wits = d["sink_wits"] if sink_wits is None else sink_wits
    one = alg.identity()
    e, f = alg.edge("e"), alg.edge("f")

    rep = Report("demo example42")
    rep.data["z"] = str(z)
    rep.add("psi is a graded E-family", bool(check_e_family(psi)) and check_graded_family(psi))
    rep.add("z* = z", z.star() == z, f"z* = {z.star()}")
    rep.add("z z = 1", z * z == one, f"z z = {z * z}")

    hp = HomPair(phi, psi)
    conj_ok = Verdict.FAIL
    detail = ""
    if z * z == one:
        c5 = check_cond5(hp, Conjugator(z, z), plus=True)
        conj_ok = c5.verdict
        detail = "; ".join(c.name for c in c5.checks if c.verdict != Verdict.PASS)
    rep.add("z psi(v) z^-1 = phi(v), z psi(ee*) z^-1 = phi(ee*)", conj_ok, detail)

    ze, fz = z * e, f * z
    rep.data["ze"] = str(ze)
    rep.data["fz"] = str(fz)
    rep.add("z e != f z", ze != fz, f"z e = {ze}; f z = {fz}")

    try:
        x, y = assemble_global_witness(hp, edge_wits, sink_wits)
        rep.data["assembled_x"] = str(x)
        rep.add("assembled witness reproduces z", x == z and y == z, f"x = {x}; y = {y}")
    except (AssemblyAssertionFailed, MissingWitness) as exc:
        rep.add("assembled witness reproduces z", Verdict.FAIL, str(exc))

    rep.add("induced K-maps agree on generators", k_maps_agree(hp))
    return rep.finalize()
