from fractions import Fraction

import pytest

from lpa import parse_element
from lpa.errors import MalformedScalar, NonComposablePath, NonPositiveCoefficient, ParseError, UnknownName
from lpa.grothendieck import parse_group_element
from lpa.monoid import parse_monoid_element
from strategies import ALGEBRAS

L2 = ALGEBRAS["l2"]
EX = ALGEBRAS["ex42"]


def test_bare_scalar_is_scalar_times_identity():
    assert parse_element("3", EX) == EX.scale(3, EX.identity())
    assert parse_element("0", EX) == EX.zero()
    assert parse_element("2 - 2", EX) == EX.zero()


def test_leading_sign_and_fractions():
    assert parse_element("-1/2 e + e", L2) == L2.scale(Fraction(1, 2), L2.edge("e"))
    assert str(parse_element("-1/2 e + e", L2)) == "1/2 e"


def test_vertex_star_is_noop():
    assert parse_element("v*", L2) == parse_element("v", L2)


def test_unknown_name_with_column():
    with pytest.raises(UnknownName) as exc:
        parse_element("e w", L2)
    assert "column 3" in str(exc.value)


def test_non_composable():
    with pytest.raises(NonComposablePath):
        parse_element("g e", EX)
    with pytest.raises(NonComposablePath):
        parse_element("e g*", EX)
    assert parse_element("e* g", EX) == EX.zero()
    # vertices multiply freely: v e is simply zero
    assert parse_element("v e", EX) == EX.zero()


@pytest.mark.parametrize("text", ["1/0 e", "1/ e", "e 2", "2/-3 e"])
def test_malformed_scalar(text):
    with pytest.raises(ParseError):
        parse_element(text, L2)


def test_malformed_scalar_type():
    with pytest.raises(MalformedScalar):
        parse_element("1/0 e", L2)


@pytest.mark.parametrize("text", ["", "e +", "+", "e ++ f", "e $", "* e"])
def test_syntax_errors(text):
    with pytest.raises(ParseError):
        parse_element(text, L2)


def test_monoid_grammar():
    g = EX.graph
    assert parse_monoid_element("[v]", g).coeffs == {("v", 0): 1}
    assert parse_monoid_element("2 t [v]", L2.graph).coeffs == {("v", 1): 2}
    assert parse_monoid_element("t^-1 [u] + [v]", g).coeffs == {("u", -1): 1, ("v", 0): 1}
    assert parse_monoid_element("[u] + [u] + t^2[u]", g).coeffs == {("u", 0): 2, ("u", 2): 1}
    assert parse_monoid_element("0", g).coeffs == {}


@pytest.mark.parametrize("text", ["0 [v]", "- [v]", "[u] - [v]"])
def test_monoid_nonpositive(text):
    with pytest.raises(NonPositiveCoefficient):
        parse_monoid_element(text, EX.graph)


@pytest.mark.parametrize("text", ["[w]", "t^ [u]", "2", "u", "[u] +"])
def test_monoid_errors(text):
    with pytest.raises(ParseError):
        parse_monoid_element(text, EX.graph)


def test_group_grammar_allows_signs():
    a = parse_group_element("[u] - 2 t [v] - [u]", EX.graph)
    assert a.coeffs == {("v", 1): -2}
    assert parse_group_element("-[u]", EX.graph).coeffs == {("u", 0): -1}
