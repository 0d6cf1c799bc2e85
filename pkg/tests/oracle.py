"""Independent oracles used by the tests.

``PathRep`` realizes a Leavitt path algebra as operators on a space of
paths: finite paths ending at a sink, and infinite paths that are
eventually a fixed cycle, with a marked integer position on the cycle so
that loops act as shifts.  For the built-in graphs the representation is
faithful, so it decides equality of elements without using the rewrite
engine.

``invariant_factors`` computes abelian group invariants from
determinantal divisors (gcd of k x k minors), not from a Smith
decomposition.
"""

from __future__ import annotations

import itertools
from math import gcd

import sympy


class PathRep:
    def __init__(self, graph, cycles=None, max_prefix=3, positions=range(-2, 3)):
        self.g = graph
        self.tails = [("sink", v, None) for v in graph.sinks]
        for c in cycles if cycles is not None else self._default_cycles():
            self.tails.append(("cycle", None, tuple(c)))
        self.states = self._test_states(max_prefix, positions)

    def _default_cycles(self):
        return [(e,) for e in self.g.edge_names if self.g.src[e] == self.g.rng[e]]

    def _tail_start(self, tail, pos):
        kind, v, c = tail
        return v if kind == "sink" else self.g.src[c[pos % len(c)]]

    def start(self, state):
        prefix, t, pos = state
        return self.g.src[prefix[0]] if prefix else self._tail_start(self.tails[t], pos)

    def _test_states(self, max_prefix, positions):
        out = []
        for t, tail in enumerate(self.tails):
            poss = [0] if tail[0] == "sink" else list(positions)
            for pos in poss:
                frontier = [()]
                for _ in range(max_prefix + 1):
                    nxt = []
                    for pre in frontier:
                        state = (pre, t, pos)
                        if self._canonical(state):
                            out.append(state)
                        s = self.start(state)
                        nxt.extend((e,) + pre for e in self.g.edge_names if self.g.rng[e] == s)
                    frontier = nxt
        return out

    def _canonical(self, state):
        prefix, t, pos = state
        kind, _, c = self.tails[t]
        return not (kind == "cycle" and prefix and prefix[-1] == c[(pos - 1) % len(c)])

    # generators acting on a single basis state; None means 0
    def vertex(self, w, state):
        return state if self.start(state) == w else None

    def edge(self, e, state):
        if self.g.rng[e] != self.start(state):
            return None
        prefix, t, pos = state
        kind, _, c = self.tails[t]
        if not prefix and kind == "cycle" and c[(pos - 1) % len(c)] == e:
            return ((), t, pos - 1)
        return ((e,) + prefix, t, pos)

    def ghost(self, e, state):
        prefix, t, pos = state
        if prefix:
            return (prefix[1:], t, pos) if prefix[0] == e else None
        kind, _, c = self.tails[t]
        if kind == "cycle" and c[pos % len(c)] == e:
            return ((), t, pos + 1)
        return None

    def monomial(self, m, state):
        for e in m.q:
            state = self.ghost(e, state)
            if state is None:
                return None
        state = self.vertex(m.vertex, state)
        for e in reversed(m.p):
            if state is None:
                return None
            state = self.edge(e, state)
        return state

    def act(self, a, state) -> dict:
        out = {}
        for m, c in a.terms.items():
            s = self.monomial(m, state)
            if s is not None:
                out[s] = out.get(s, 0) + c
        return {s: c for s, c in out.items() if c}

    def matrix(self, a) -> tuple:
        """The action of ``a`` on every test state, as a hashable value."""
        return tuple(tuple(sorted(self.act(a, s).items(), key=repr)) for s in self.states)

    def act_vector(self, a, vec: dict) -> dict:
        out = {}
        for s, c in vec.items():
            for s2, c2 in self.act(a, s).items():
                out[s2] = out.get(s2, 0) + c * c2
        return {s: c for s, c in out.items() if c}

    def product_matrix(self, a, b) -> tuple:
        """The action of ``a`` after ``b``, computed by composing operators."""
        rows = []
        for s in self.states:
            vec = self.act_vector(a, self.act(b, s))
            rows.append(tuple(sorted(vec.items(), key=repr)))
        return tuple(rows)


def word_action(rep, word, state):
    """Apply a word of generator symbols (``v``, ``e``, ``e*``) right to left."""
    for sym in reversed(word):
        if state is None:
            return None
        if sym.endswith("*"):
            state = rep.ghost(sym[:-1], state)
        elif rep.g.is_vertex(sym):
            state = rep.vertex(sym, state)
        else:
            state = rep.edge(sym, state)
    return state


def invariant_factors(rows, ncols) -> tuple:
    """``(torsion factors > 1, free rank)`` of ``Z^ncols / rowspace(rows)``."""
    m = sympy.Matrix(rows) if rows else sympy.zeros(0, ncols)
    rank = m.rank()
    divisors = [1]
    for k in range(1, rank + 1):
        d = 0
        for ri in itertools.combinations(range(m.rows), k):
            for ci in itertools.combinations(range(ncols), k):
                d = gcd(d, int(m.extract(list(ri), list(ci)).det()))
        divisors.append(abs(d))
    factors = [divisors[k] // divisors[k - 1] for k in range(1, rank + 1)]
    return tuple(f for f in factors if f != 1), ncols - rank

