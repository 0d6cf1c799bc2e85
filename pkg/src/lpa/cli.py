"""Command-line front end: ``lpa <command> [options]``.

Exit codes: 0 Pass/Equal/valid, 1 Fail/invalid/Distinct, 2 Unknown,
3 usage or input error.  ``--json`` prints a structured report instead of
text.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import formats
from .algebra import LeavittPathAlgebra
from .errors import LPAError
from .faithfulness import (
    HomPair,
    assemble_global_witness,
    check_cond2,
    check_cond4,
    check_cond5,
    example42_demo,
)
from .graph import classify_vertices, incidence_matrix, load_graph
from .grothendieck import (
    DEFAULT_WINDOW,
    check_pog_hom,
    group_equal,
    group_presentation,
    k0_t1,
    parse_group_element,
)
from .homs import (
    check_e_family,
    check_graded_family,
    check_injectivity_criterion,
    check_unital,
    extend_hom,
    induced_k_map,
)
from .idempotents import EquivWitness, is_homogeneous_idempotent, normalize_witnesses, verify_graded_equiv
from .monoid import DEFAULT_SPEC_SET, default_budget, monoid_distinct, monoid_equal, parse_monoid_element
from .parsing import parse_element
from .report import USAGE_EXIT, Report, Verdict
from .scalars import field_from_spec
from .shift import SEWitness, verify_se_witness, verify_sse_chain


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _common():
    p = _Parser(add_help=False)
    p.add_argument("-g", "--graph", default=None, help="graph file or built-in name (l2, loop1, ex42, arrow, acyclic3)")
    p.add_argument("--field", default="q", help="q (rationals, default) or gf<p>")
    p.add_argument("--budget", type=int, default=None, help="node budget for monoid search")
    p.add_argument("--window", type=int, default=DEFAULT_WINDOW, help="Laurent degree window")
    p.add_argument("--json", action="store_true", help="print a JSON report")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    top = _Parser(prog="lpa", description="Leavitt path algebra computations and certificate checks")
    sub = top.add_subparsers(dest="command", parser_class=_Parser)

    def leaf(parent, name, func, help_=None):
        p = parent.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    def group(name, help_):
        p = sub.add_parser(name, help=help_)
        return p.add_subparsers(dest="sub", parser_class=_Parser)

    g = group("graph", "inspect a graph")
    p = leaf(g, "check", cmd_graph_check)
    p.add_argument("file", nargs="?")
    p = leaf(g, "matrix", cmd_graph_matrix)
    p.add_argument("file", nargs="?")

    p = leaf(sub, "nf", cmd_nf, "normal form of an element")
    p.add_argument("expr")
    p = leaf(sub, "mul", cmd_mul, "product of elements")
    p.add_argument("exprs", nargs="+")
    p = leaf(sub, "deg", cmd_deg, "degree components")
    p.add_argument("expr")
    p = leaf(sub, "inv", cmd_inv, "involution")
    p.add_argument("expr")

    g = group("idem", "idempotents and equivalences")
    p = leaf(g, "check", cmd_idem_check)
    p.add_argument("expr")
    p = leaf(g, "equiv", cmd_idem_equiv)
    p.add_argument("p")
    p.add_argument("q")
    p.add_argument("--witness", help="witness file with x, y, shift")
    p.add_argument("--x")
    p.add_argument("--y")
    p.add_argument("--shift", type=int)
    p.add_argument("--normalize", action="store_true", help="also print (pxq, qyp)")

    g = group("monoid", "talented monoid")
    p = leaf(g, "eq", cmd_monoid_eq)
    p.add_argument("a")
    p.add_argument("b")
    p = leaf(g, "distinct", cmd_monoid_distinct)
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--spec", default=None, help="comma-separated specialization points")

    g = group("k0", "graded Grothendieck group")
    leaf(g, "pres", cmd_k0_pres)
    leaf(g, "t1", cmd_k0_t1)
    p = leaf(g, "eq", cmd_k0_eq)
    p.add_argument("a")
    p.add_argument("b")
    p = leaf(g, "hom", cmd_k0_hom)
    p.add_argument("file")
    p.add_argument("--source")
    p.add_argument("--target")

    g = group("hom", "E-families and induced maps")
    for name, func in (("check", cmd_hom_check), ("eval", cmd_hom_eval), ("kmap", cmd_hom_kmap)):
        p = leaf(g, name, func)
        p.add_argument("file")
        p.add_argument("--source")
        p.add_argument("--target")
        if name == "eval":
            p.add_argument("expr")
        if name == "kmap":
            p.add_argument("certs")

    g = group("faithful", "conditions for equal induced K-maps")
    for name, func in (("cond2", cmd_cond2), ("cond4", cmd_cond4), ("cond5", cmd_cond5), ("assemble", cmd_assemble)):
        p = leaf(g, name, func)
        p.add_argument("pair")
        p.add_argument("data")
        p.add_argument("--source")
        p.add_argument("--target")
        if name in ("cond4", "cond5"):
            p.add_argument("--plus", action="store_true")

    g = group("se", "shift equivalence witnesses")
    p = leaf(g, "verify", cmd_se_verify)
    for a in ("A", "B", "witness"):
        p.add_argument(a)
    p = leaf(g, "sse", cmd_se_sse)
    for a in ("A", "B", "chain"):
        p.add_argument(a)

    g = group("demo", "built-in demonstrations")
    leaf(g, "example42", cmd_demo_example42)
    return top


# -- helpers -----------------------------------------------------------------

def _graph(args, fallback=None):
    ref = args.graph or fallback
    if ref is None:
        raise UsageError("a graph is required (-g/--graph)")
    return load_graph(ref)


def _algebra(args, graph=None):
    return LeavittPathAlgebra(graph or _graph(args), field_from_spec(args.field))


def _doc(ref):
    """A JSON document from a file path, or inline JSON text."""
    path = Path(ref)
    if path.is_file():
        return formats.read_json(path), path.parent
    try:
        return json.loads(ref), Path.cwd()
    except json.JSONDecodeError:
        raise UsageError(f"{ref!r} is neither a file nor inline JSON") from None


def _source_target(args, doc, base):
    default = load_graph(args.graph) if args.graph else None
    src = load_graph(args.source) if args.source else formats.graph_ref(doc, "source", default, base)
    tgt = load_graph(args.target) if args.target else formats.graph_ref(doc, "target", default, base)
    return src, LeavittPathAlgebra(tgt, field_from_spec(args.field))


def _family(args):
    doc, base = _doc(args.file)
    src, alg = _source_target(args, doc, base)
    return formats.efamily_from_doc(doc, src, alg)


def _pair(args):
    doc, base = _doc(args.pair)
    src, alg = _source_target(args, doc, base)
    phi, psi = formats.hompair_from_doc(doc, src, alg)
    return HomPair(phi, psi)


# -- commands -----------------------------------------------------------------

def cmd_graph_check(args):
    g = _graph(args, args.file)
    vc = classify_vertices(g)
    rep = Report("graph check")
    rep.data = {
        "vertices": list(g.vertices),
        "edges": [list(e) for e in g.edges],
        "regular": [v for v in g.vertices if v in vc.regular],
        "sinks": [v for v in g.vertices if v in vc.sinks],
        "special_edges": dict(g.special),
    }
    rep.text = (f"{len(g.vertices)} vertices, {len(g.edges)} edges\n"
                f"regular: {', '.join(rep.data['regular']) or '-'}\n"
                f"sinks: {', '.join(rep.data['sinks']) or '-'}")
    return rep


def cmd_graph_matrix(args):
    g = _graph(args, args.file)
    a = incidence_matrix(g)
    rep = Report("graph matrix")
    rep.data = {"order": list(g.vertices), "rows": a.tolist()}
    rep.text = "\n".join(" ".join(str(x) for x in row) for row in a.tolist())
    return rep


def _element_report(command, el):
    rep = Report(command)
    rep.data = {"element": str(el)}
    rep.text = str(el)
    return rep


def cmd_nf(args):
    return _element_report("nf", parse_element(args.expr, _algebra(args)))


def cmd_mul(args):
    alg = _algebra(args)
    out = alg.identity()
    for expr in args.exprs:
        out = out * parse_element(expr, alg)
    return _element_report("mul", out)


def cmd_deg(args):
    el = parse_element(args.expr, _algebra(args))
    comps = el.degree_components()
    rep = Report("deg")
    rep.data = {"components": {str(n): str(c) for n, c in comps.items()}}
    rep.text = "\n".join(f"{n}: {c}" for n, c in comps.items()) or "0"
    return rep


def cmd_inv(args):
    return _element_report("inv", parse_element(args.expr, _algebra(args)).star())


def cmd_idem_check(args):
    el = parse_element(args.expr, _algebra(args))
    res = is_homogeneous_idempotent(el)
    rep = Report("idem check")
    rep.add("homogeneous idempotent", res.ok, f"degree {res.degree}" if res.ok else res.reason)
    return rep.finalize()


def cmd_idem_equiv(args):
    alg = _algebra(args)
    p, q = parse_element(args.p, alg), parse_element(args.q, alg)
    if args.witness:
        doc, _ = _doc(args.witness)
        w = formats.witness_from_doc(doc, alg)
    elif args.x is not None and args.y is not None:
        x, y = parse_element(args.x, alg), parse_element(args.y, alg)
        shift = args.shift if args.shift is not None else (x.degree() or 0)
        w = EquivWitness(x, y, shift)
    else:
        raise UsageError("give --witness FILE or both --x and --y")
    res = verify_graded_equiv(p, q, w)
    rep = Report("idem equiv")
    rep.add("graded equivalence", res.valid, res.reason or f"shift {res.shift}")
    rep.data = {"shift": w.shift, "in_corners": res.in_corners}
    if res.valid and args.normalize:
        nw = normalize_witnesses(p, q, w.x, w.y)
        rep.data.update({"x": str(nw.x), "y": str(nw.y)})
        rep.text = f"normalized: x = {nw.x}; y = {nw.y}"
    return rep.finalize()


def cmd_monoid_eq(args):
    g = _graph(args)
    a, b = parse_monoid_element(args.a, g), parse_monoid_element(args.b, g)
    budget = args.budget if args.budget is not None else default_budget()
    res = monoid_equal(a, b, budget)
    rep = Report("monoid eq", Verdict.PASS if res.equal else Verdict.UNKNOWN)
    rep.data = {
        "result": res.verdict,
        "nodes": res.nodes,
        "budget": res.budget,
        "depth": res.depth,
        "trace": [[s.side, s.vertex, s.exponent, s.count] for s in res.trace],
        "common": str(res.common) if res.common is not None else None,
    }
    rep.text = f"{res.verdict} (nodes {res.nodes}/{res.budget})"
    if res.equal:
        rep.text += f"\ncommon descendant: {res.common}"
    elif res.reason:
        rep.text += f"\n{res.reason}"
    return rep


def _spec_set(text):
    if text is None:
        return DEFAULT_SPEC_SET
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad --spec list {text!r}") from None


def cmd_monoid_distinct(args):
    g = _graph(args)
    a, b = parse_monoid_element(args.a, g), parse_monoid_element(args.b, g)
    res = monoid_distinct(a, b, _spec_set(args.spec))
    rep = Report("monoid distinct", Verdict.FAIL if res.distinct else Verdict.UNKNOWN)
    rep.data = {"result": res.verdict, "witness": res.witness, "images": [str(i) for i in res.images]}
    rep.text = res.verdict
    if res.distinct:
        rep.text += f" at t = {res.witness}: {res.images[0]} vs {res.images[1]}"
    return rep


def cmd_k0_pres(args):
    pres = group_presentation(_graph(args))
    rep = Report("k0 pres")
    rep.data = {"generators": list(pres.generators), "relations": {v: str(r) for v, r in pres.relations.items()}}
    rep.text = str(pres)
    return rep


def cmd_k0_t1(args):
    grp = k0_t1(_graph(args))
    rep = Report("k0 t1")
    rep.data = {"torsion": list(grp.torsion), "free_rank": grp.free_rank}
    rep.text = str(grp)
    return rep


def cmd_k0_eq(args):
    g = _graph(args)
    a, b = parse_group_element(args.a, g), parse_group_element(args.b, g)
    res = group_equal(a, b, args.window)
    rep = Report("k0 eq")
    rep.data = {"result": res.verdict, "window": res.window,
                "multipliers": {v: {str(j): c for j, c in poly.items()} for v, poly in res.multipliers.items()}}
    if res.equal:
        rep.verdict = Verdict.PASS
        rep.text = "Equal"
    else:
        dist = monoid_distinct(a, b)
        if dist.distinct:
            rep.verdict = Verdict.FAIL
            rep.data["result"] = "Distinct"
            rep.data["witness"] = dist.witness
            rep.text = f"Distinct at t = {dist.witness}"
        else:
            rep.verdict = Verdict.UNKNOWN
            rep.text = f"Unknown (window {res.window})"
    return rep


def cmd_k0_hom(args):
    doc, base = _doc(args.file)
    src, alg = _source_target(args, doc, base)
    h = formats.pointed_hom_from_doc(doc, src, alg.graph)
    res = check_pog_hom(h, args.window)
    rep = Report("k0 hom")
    rep.add("well_defined", res.well_defined, json.dumps(res.details["well_defined"]))
    rep.add("order_preserving", res.order_preserving, json.dumps(res.details["order_preserving"]))
    rep.add("unit_preserving", res.unit_preserving)
    return rep.finalize()


def cmd_hom_check(args):
    fam = _family(args)
    res = check_e_family(fam)
    rep = Report("hom check")
    for ax, fails in res.failures.items():
        rep.add(f"({ax})", not fails, "; ".join(fails[:5]))
    if res:
        rep.add("graded", check_graded_family(fam))
        rep.add("unital", check_unital(fam))
        if check_graded_family(fam):
            rep.add("injective by graded uniqueness", check_injectivity_criterion(fam))
    return rep.finalize()


def cmd_hom_eval(args):
    fam = _family(args)
    hom = extend_hom(fam)
    el = parse_element(args.expr, LeavittPathAlgebra(fam.source, fam.target.field))
    return _element_report("hom eval", hom.eval(el))


def cmd_hom_kmap(args):
    fam = _family(args)
    doc, _ = _doc(args.certs)
    certs = formats.certificates_from_doc(doc, fam.target)
    h = induced_k_map(fam, certs)
    res = check_pog_hom(h, args.window)
    rep = Report("hom kmap")
    rep.data = {"images": {v: str(x) for v, x in h.images.items()}}
    rep.text = "\n".join(f"[{v}] -> {x}" for v, x in h.images.items())
    rep.add("well_defined", res.well_defined)
    rep.add("order_preserving", res.order_preserving)
    rep.add("unit_preserving", res.unit_preserving)
    return rep.finalize()


def cmd_cond2(args):
    hp = _pair(args)
    doc, _ = _doc(args.data)
    return check_cond2(hp, formats.pair_map(doc, "vertices", hp.target), formats.pair_map(doc, "edges", hp.target))


def cmd_cond4(args):
    hp = _pair(args)
    doc, _ = _doc(args.data)
    x, y = formats.xy_from_doc(doc, hp.target)
    return check_cond4(hp, x, y, args.plus)


def cmd_cond5(args):
    hp = _pair(args)
    doc, _ = _doc(args.data)
    return check_cond5(hp, formats.conjugator_from_doc(doc, hp.target), args.plus)


def cmd_assemble(args):
    hp = _pair(args)
    doc, _ = _doc(args.data)
    sinks = formats.pair_map(doc, "sinks", hp.target) or formats.pair_map(doc, "vertices", hp.target)
    x, y = assemble_global_witness(hp, formats.pair_map(doc, "edges", hp.target), sinks)
    rep = Report("faithful assemble")
    rep.data = {"x": str(x), "y": str(y)}
    rep.text = f"x = {x}\ny = {y}"
    rep.add("assembled pair satisfies cond4+", True)
    return rep.finalize()


def _matrix_arg(ref):
    doc, _ = _doc(ref)
    return formats.matrix_from_doc(doc)


def cmd_se_verify(args):
    A, B = _matrix_arg(args.A), _matrix_arg(args.B)
    doc, _ = _doc(args.witness)
    res = verify_se_witness(A, B, formats.se_witness_from_doc(doc))
    rep = Report("se verify")
    rep.add("shift equivalence witness", res.valid, res.reason)
    return rep.finalize()


def cmd_se_sse(args):
    A, B = _matrix_arg(args.A), _matrix_arg(args.B)
    doc, _ = _doc(args.chain)
    res = verify_sse_chain(formats.chain_from_doc(doc), A, B)
    rep = Report("se sse")
    rep.add("strong shift equivalence chain", res.valid, res.reason)
    rep.data = {"failing_step": res.step}
    return rep.finalize()


def cmd_demo_example42(args):
    return example42_demo(field=field_from_spec(args.field))


def dispatch(argv) -> tuple:
    """Run one command; returns ``(report or None, exit code, output text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError(parser.format_usage().strip())
        rep = args.func(args)
    except UsageError as exc:
        return None, USAGE_EXIT, f"error: {exc}"
    except (LPAError, ValueError) as exc:
        return None, USAGE_EXIT, f"error: {type(exc).__name__}: {exc}"
    out = rep.to_json() if args.json else rep.render()
    return rep, rep.exit_code, out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    rep, code, out = dispatch(argv)
    stream = sys.stdout if rep is not None else sys.stderr
    print(out, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
