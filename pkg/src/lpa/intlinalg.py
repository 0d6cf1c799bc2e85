"""Exact integer linear algebra: Smith decomposition and integer systems.

Backed by sympy's Smith decomposition; every decomposition is re-checked
(``S M T == D``) before use so a backend defect cannot pass silently.
"""

from __future__ import annotations

from dataclasses import dataclass

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp


def _matmul(a, b):
    if not a:
        return []
    cols = len(b[0]) if b else 0
    return [[sum(r[k] * b[k][j] for k in range(len(b))) for j in range(cols)] for r in a]


def _eye(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class SmithDecomposition:
    """``S @ M @ T == D`` with ``S``, ``T`` unimodular and ``D`` diagonal."""

    diagonal: tuple  # d_0 | d_1 | ... , length min(rows, cols), nonnegative
    S: list
    T: list
    rows: int
    cols: int

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def smith_decomposition(m) -> SmithDecomposition:
    m = [[int(x) for x in row] for row in m]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if rows == 0 or cols == 0:
        return SmithDecomposition((), _eye(rows), _eye(cols), rows, cols)
    dm = DomainMatrix([[ZZ(x) for x in row] for row in m], (rows, cols), ZZ)
    D, S, T = smith_normal_decomp(dm)
    D = [[int(x) for x in row] for row in D.to_list()]
    S = [[int(x) for x in row] for row in S.to_list()]
    T = [[int(x) for x in row] for row in T.to_list()]
    diag = []
    for i in range(min(rows, cols)):
        d = D[i][i]
        if d < 0:
            # flip the sign through S to keep the diagonal nonnegative
            S[i] = [-x for x in S[i]]
            d = -d
        diag.append(d)
    expected = [[diag[i] if i == j else 0 for j in range(cols)] for i in range(rows)]
    if _matmul(_matmul(S, m), T) != expected:
        raise ArithmeticError("Smith decomposition failed its own check")
    return SmithDecomposition(tuple(diag), S, T, rows, cols)


def solve_integer(m, rhs):
    """An integer solution ``f`` of ``m @ f == rhs``, or ``None`` if there is none."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if cols == 0:
        return [] if all(r == 0 for r in rhs) else None
    dec = smith_decomposition(m)
    srhs = [sum(dec.S[i][k] * rhs[k] for k in range(rows)) for i in range(rows)]
    y = [0] * cols
    for i in range(rows):
        d = dec.diagonal[i] if i < len(dec.diagonal) else 0
        if d == 0:
            if srhs[i] != 0:
                return None
        else:
            if srhs[i] % d:
                return None
            y[i] = srhs[i] // d
    f = [sum(dec.T[j][k] * y[k] for k in range(cols)) for j in range(cols)]
    if [sum(m[i][j] * f[j] for j in range(cols)) for i in range(rows)] != list(rhs):
        raise ArithmeticError("integer solve failed its own check")
    return f


@dataclass(frozen=True)
class QuotientClass:
    """Class of a vector in ``Z^n / rowspace(M)``.

    ``moduli[i]`` is the order of the i-th cyclic factor (0 for a free factor);
    ``residues[i]`` is the coordinate in it.
    """

    moduli: tuple
    residues: tuple

    def group_str(self) -> str:
        if not self.moduli:
            return "0"
        return " + ".join("Z" if d == 0 else f"Z/{d}" for d in self.moduli)

    def __str__(self):
        if not self.moduli:
            return "0 in 0"
        return f"({', '.join(map(str, self.residues))}) in {self.group_str()}"


class LatticeQuotient:
    """The abelian group ``Z^n`` modulo the row lattice of an integer matrix."""

    def __init__(self, relations, n):
        self.n = n
        self.relations = [list(r) for r in relations]
        if self.relations:
            dec = smith_decomposition(self.relations)
            self.T = dec.T
            diag = list(dec.diagonal) + [0] * (n - len(dec.diagonal))
        else:
            self.T = _eye(n)
            diag = [0] * n
        # only nontrivial factors carry information
        self.keep = [i for i, d in enumerate(diag) if d != 1]
        self.moduli = tuple(diag[i] for i in self.keep)

    def classify(self, vec) -> QuotientClass:
        coords = [sum(vec[k] * self.T[k][j] for k in range(self.n)) for j in range(self.n)]
        res = []
        for i, d in zip(self.keep, self.moduli):
            res.append(coords[i] % d if d else coords[i])
        return QuotientClass(self.moduli, tuple(res))

    @property
    def torsion(self) -> tuple:
        return tuple(d for d in self.moduli if d)

    @property
    def free_rank(self) -> int:
        return sum(1 for d in self.moduli if d == 0)
