import random

import pytest
from hypothesis import given, settings, strategies as st

from lpa import parse_element
from lpa.errors import NotIdempotent, ProductMismatch
from lpa.idempotents import (
    EquivWitness,
    check_equiv_degree_zero,
    check_leq,
    check_orthogonal,
    is_homogeneous_idempotent,
    normalize_witnesses,
    verify_graded_equiv,
    witness_from_path,
)
from oracle import PathRep
from strategies import ALGEBRAS, GRAPH_NAMES, random_path_to


def el(text, graph):
    return parse_element(text, ALGEBRAS[graph])


def test_homogeneous_idempotent_examples():
    r = is_homogeneous_idempotent(el("v", "l2"))
    assert r.ok and r.degree == 0
    r = is_homogeneous_idempotent(el("e e*", "ex42"))
    assert r.ok and r.degree == 0
    r = is_homogeneous_idempotent(el("e", "l2"))
    assert not r.ok and "idempotent" in r.reason
    assert not is_homogeneous_idempotent(el("v + e", "l2")).ok


def test_orthogonal_examples():
    assert check_orthogonal(el("e e*", "ex42"), el("f f*", "ex42"))
    assert check_orthogonal(el("u", "ex42"), el("v", "ex42"))
    assert not check_orthogonal(el("v", "l2"), el("e e*", "l2"))
    with pytest.raises(NotIdempotent):
        check_orthogonal(el("e", "l2"), el("v", "l2"))


def test_leq_examples():
    assert check_leq(el("e e*", "ex42"), el("u", "ex42"))
    assert not check_leq(el("u", "ex42"), el("v", "ex42"))
    p = el("g g*", "ex42")
    assert check_leq(p, p)


LEMMA_CERTS = [
    ("loop1", "e e*", "u", "e", "e*", 1),
    ("l2", "e e*", "v", "e", "e*", 1),
    ("l2", "v", "v", "v", "v", 0),
]


@pytest.mark.parametrize("graph,p,q,x,y,shift", LEMMA_CERTS)
def test_verify_graded_equiv_examples(graph, p, q, x, y, shift):
    P, Q, X, Y = (el(s, graph) for s in (p, q, x, y))
    res = verify_graded_equiv(P, Q, EquivWitness(X, Y, shift))
    assert res.valid and res.shift == shift and res.in_corners
    # oracle check of the two products
    rep = PathRep(ALGEBRAS[graph].graph)
    assert rep.product_matrix(X, Y) == rep.matrix(P)
    assert rep.product_matrix(Y, X) == rep.matrix(Q)


def test_ee_star_is_v_minus_ff_star():
    assert el("e e*", "l2") == el("v - f f*", "l2")


def test_wrong_shift_or_product():
    P, Q = el("e e*", "l2"), el("v", "l2")
    assert not verify_graded_equiv(P, Q, EquivWitness(el("e", "l2"), el("e*", "l2"), 0)).valid
    res = verify_graded_equiv(P, Q, EquivWitness(el("f", "l2"), el("f*", "l2"), 1))
    assert not res.valid and "x*y" in res.reason
    with pytest.raises(NotIdempotent):
        verify_graded_equiv(el("e", "l2"), Q, EquivWitness(Q, Q, 0))


def test_normalize_examples():
    P, Q = el("e e*", "l2"), el("v", "l2")
    w = normalize_witnesses(P, Q, el("e", "l2"), el("e*", "l2"))
    assert (w.x, w.y, w.shift) == (el("e", "l2"), el("e*", "l2"), 1)
    v = el("v", "l2")
    w = normalize_witnesses(v, v, v, v)
    assert (w.x, w.y) == (v, v)
    with pytest.raises(ProductMismatch):
        normalize_witnesses(P, Q, el("f", "l2"), el("e*", "l2"))


def test_normalize_moves_witness_into_corners():
    # y = e* + e* g g* gives the same products as e*, but y is not in q R p
    p, q = el("e e*", "ex42"), el("u", "ex42")
    x, y = el("e", "ex42"), el("e* + e* g g*", "ex42")
    assert x * y == p and y * x == q
    res = verify_graded_equiv(p, q, EquivWitness(x, y, 1))
    assert res.valid
    w = normalize_witnesses(p, q, x, y)
    assert p * w.x * q == w.x and q * w.y * p == w.y
    assert verify_graded_equiv(p, q, w).in_corners


def random_path_witness(alg, rng):
    g = alg.graph
    while True:
        end = rng.choice(g.vertices)
        path = random_path_to(g, rng, end, rng.randint(1, 4))
        if path:
            return witness_from_path(alg, path)


@pytest.mark.parametrize("name", GRAPH_NAMES)
@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_symmetry_on_path_witnesses(name, seed):
    alg = ALGEBRAS[name]
    if not alg.graph.edges:
        return
    p, q, w = random_path_witness(alg, random.Random(seed))
    res = verify_graded_equiv(p, q, w)
    assert res.valid and res.shift == w.shift
    back = verify_graded_equiv(q, p, w.swap())
    assert back.valid and back.shift == -w.shift
    nw = normalize_witnesses(p, q, w.x, w.y)
    assert p * nw.x * q == nw.x and q * nw.y * p == nw.y


@pytest.mark.parametrize("name", GRAPH_NAMES)
@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_degree_zero_validity_agrees(name, seed):
    alg = ALGEBRAS[name]
    rng = random.Random(seed)
    if not alg.graph.edges:
        return
    # paths m, n with a common range: p = mm* and q = nn* via x = mn*, y = nm*
    _, _, w1 = random_path_witness(alg, rng)
    m_path = next(iter(w1.x.terms)).p
    end = alg.graph.rng[m_path[-1]]
    n_path = random_path_to(alg.graph, rng, end, rng.randint(0, 3))
    m = w1.x
    n = alg.path(n_path) if n_path else alg.vertex(end)
    p, q = m * m.star(), n * n.star()
    x, y = m * n.star(), n * m.star()
    shift = len(m_path) - len(n_path)
    graded = verify_graded_equiv(p, q, EquivWitness(x, y, shift))
    assert graded.valid
    plain = check_equiv_degree_zero(p, q, x, y)
    assert plain.valid == (shift == 0)
    if shift == 0:
        assert verify_graded_equiv(p, q, EquivWitness(x, y, 0)).valid == plain.valid
