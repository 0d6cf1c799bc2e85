"""Parsers for element expressions and monoid/group expressions.

Element expressions::

    expr   := term (("+"|"-") term)*
    term   := [scalar] factor+  |  scalar
    factor := name ["*"]
    scalar := int ["/" posint]

Factors are multiplied left to right; ``e*`` is the ghost edge of ``e``
and ``*`` on a vertex is a no-op.  A bare scalar denotes a multiple of
the identity.

Monoid expressions::

    mexpr := mterm ("+" mterm)*
    mterm := [posint] ["t" ["^" int]] "[" vertex "]"

Group expressions are monoid expressions with signed integer
coefficients and ``-`` between terms.  ``0`` denotes the zero element in
every grammar.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import MalformedScalar, NonComposablePath, NonPositiveCoefficient, ParseError, UnknownName

_ELEM_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/]))")


def _tokenize(text, pattern):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = pattern.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", f"column {pos + 1}")
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    return tokens


class _Cursor:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self, kind=None, value=None):
        if self.i >= len(self.tokens):
            return None
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            return None
        if value is not None and tok[1] != value:
            return None
        return tok

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    @property
    def column(self):
        if self.i < len(self.tokens):
            return f"column {self.tokens[self.i][2]}"
        return "end of input"

    def done(self):
        return self.i >= len(self.tokens)


def parse_element(text: str, algebra):
    """Parse an element expression into the normal form of the element it denotes."""
    g = algebra.graph
    cur = _Cursor(_tokenize(text, _ELEM_TOKEN))
    if cur.done():
        raise ParseError("empty expression")
    total = algebra.zero()
    sign = 1
    if cur.peek("op", "-") or cur.peek("op", "+"):
        sign = -1 if cur.take()[1] == "-" else 1
    while True:
        coeff, factors = _parse_term(cur, algebra)
        total = total + algebra.scale(sign * coeff, factors)
        if cur.done():
            return total
        tok = cur.peek("op")
        if tok is None or tok[1] not in "+-":
            raise ParseError("expected '+' or '-'", cur.column)
        sign = -1 if cur.take()[1] == "-" else 1


def _parse_scalar(cur):
    num = int(cur.take()[1])
    if cur.peek("op", "/"):
        cur.take()
        tok = cur.peek("num")
        if tok is None:
            raise MalformedScalar("expected a positive integer denominator", cur.column)
        den = int(cur.take()[1])
        if den == 0:
            raise MalformedScalar("zero denominator", f"column {tok[2]}")
        return Fraction(num, den)
    return Fraction(num)


def _parse_term(cur, algebra):
    g = algebra.graph
    coeff = Fraction(1)
    had_scalar = cur.peek("num") is not None
    if had_scalar:
        coeff = _parse_scalar(cur)
    # (start vertex, end vertex) of the previous edge-type factor
    prev = None
    value = None
    while cur.peek("name"):
        _, name, col = cur.take()
        ghost = False
        if cur.peek("op", "*"):
            cur.take()
            ghost = True
        if g.is_vertex(name):
            factor = algebra.vertex(name)
            span = None
        elif g.is_edge(name):
            factor = algebra.ghost(name) if ghost else algebra.edge(name)
            s, r = g.src[name], g.rng[name]
            span = (r, s) if ghost else (s, r)
        else:
            raise UnknownName(f"unknown vertex or edge {name!r}", f"column {col}")
        if span is not None:
            if prev is not None and prev[1] != span[0]:
                raise NonComposablePath(
                    f"{name}{'*' if ghost else ''} does not compose with the preceding factor",
                    f"column {col}",
                )
            prev = span
        value = factor if value is None else value * factor
    if value is None:
        nxt = cur.peek()
        if not had_scalar or nxt is not None and not (nxt[0] == "op" and nxt[1] in "+-"):
            raise ParseError("expected a factor", cur.column)
        value = algebra.identity()
    if cur.peek("num"):
        raise MalformedScalar("scalar must precede the factors of a term", cur.column)
    return coeff, value


_MON_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<t>t)(?![A-Za-z0-9_])|(?P<vertex>\[\s*[A-Za-z][A-Za-z0-9_]*\s*\])"
    r"|(?P<op>[-+^]))"
)


def parse_laurent_terms(text: str, graph, signed: bool):
    """Parse a monoid (``signed=False``) or group expression into ``{(v, k): n}``."""
    tokens = _tokenize(text, _MON_TOKEN)
    cur = _Cursor(tokens)
    if cur.done():
        raise ParseError("empty expression")
    if len(tokens) == 1 and tokens[0][:2] == ("num", "0"):
        return {}
    out = {}
    sign = 1
    if cur.peek("op", "-") or cur.peek("op", "+"):
        tok = cur.take()
        if tok[1] == "-" and not signed:
            raise NonPositiveCoefficient("monoid coefficients must be positive", f"column {tok[2]}")
        sign = -1 if tok[1] == "-" else 1
    while True:
        coeff = 1
        col = cur.column
        if cur.peek("num"):
            coeff = int(cur.take()[1])
            if coeff == 0 and not signed:
                raise NonPositiveCoefficient("monoid coefficients must be positive", col)
        exp = 0
        if cur.peek("t"):
            cur.take()
            exp = 1
            if cur.peek("op", "^"):
                cur.take()
                neg = False
                if cur.peek("op", "-"):
                    cur.take()
                    neg = True
                if not cur.peek("num"):
                    raise ParseError("expected an integer exponent", cur.column)
                exp = int(cur.take()[1]) * (-1 if neg else 1)
        if not cur.peek("vertex"):
            raise ParseError("expected a bracketed vertex like [v]", cur.column)
        _, raw, vcol = cur.take()
        v = raw.strip("[] \t")
        if not graph.is_vertex(v):
            raise UnknownName(f"unknown vertex {v!r}", f"column {vcol}")
        key = (v, exp)
        out[key] = out.get(key, 0) + sign * coeff
        if out[key] == 0:
            del out[key]
        if cur.done():
            return out
        tok = cur.peek("op")
        if tok is None or tok[1] not in "+-":
            raise ParseError("expected '+'", cur.column)
        if tok[1] == "-" and not signed:
            raise NonPositiveCoefficient("monoid coefficients must be positive", f"column {tok[2]}")
        sign = -1 if cur.take()[1] == "-" else 1
