import sympy
from hypothesis import assume, given, settings, strategies as st

from lpa.intlinalg import LatticeQuotient, smith_decomposition, solve_integer
from oracle import invariant_factors

entries = st.integers(-4, 4)


def matrices(rows, cols):
    return st.lists(st.lists(entries, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 3).flatmap(lambda r: st.integers(1, 3).flatmap(lambda c: matrices(r, c))))
def test_smith_matches_determinantal_divisors(m):
    dec = smith_decomposition(m)
    nonzero = [d for d in dec.diagonal if d]
    torsion, free = invariant_factors(m, len(m[0]))
    assert tuple(d for d in nonzero if d != 1) == torsion
    assert len(m[0]) - dec.rank == free
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0


@settings(max_examples=100, deadline=None)
@given(matrices(2, 3), st.lists(entries, min_size=3, max_size=3))
def test_solve_finds_constructed_solutions(m, f):
    rhs = [sum(r[j] * f[j] for j in range(3)) for r in m]
    sol = solve_integer(m, rhs)
    assert sol is not None
    assert [sum(r[j] * sol[j] for j in range(3)) for r in m] == rhs


def test_solve_reports_no_solution():
    assert solve_integer([[2, 4]], [3]) is None
    assert solve_integer([[0]], [1]) is None
    assert solve_integer([[3]], [6]) == [2]


@settings(max_examples=100, deadline=None)
@given(matrices(2, 2), st.lists(entries, min_size=2, max_size=2), st.lists(entries, min_size=2, max_size=2))
def test_quotient_classes_match_rational_membership(m, x, y):
    M = sympy.Matrix(m)
    assume(M.det() != 0)
    q = LatticeQuotient(m, 2)
    diff = sympy.Matrix([[x[0] - y[0], x[1] - y[1]]])
    in_lattice = all(c.is_integer for c in diff * M.inv())
    assert (q.classify(x) == q.classify(y)) == in_lattice


def test_quotient_without_relations_is_free():
    q = LatticeQuotient([], 2)
    assert q.free_rank == 2 and q.torsion == ()
    assert q.classify([1, 2]).residues == (1, 2)
