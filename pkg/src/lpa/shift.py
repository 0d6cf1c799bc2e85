"""Witness checks for shift equivalence of nonnegative integer matrices.

Shift equivalence with lag ``l``: nonnegative ``R``, ``S`` with
``AR = RB``, ``SA = BS``, ``RS = A^l`` and ``SR = B^l``.  An elementary
strong shift equivalence is ``A = RS``, ``B = SR``; strong shift
equivalence is a finite chain of those.  Matrices are held as numpy
object arrays so entries are exact Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError, ShapeMismatch


def as_matrix(rows) -> np.ndarray:
    if isinstance(rows, dict):
        rows = rows.get("rows")
    try:
        m = np.array(rows, dtype=object)
    except ValueError:
        raise InputError("matrix rows must be rectangular") from None
    if m.ndim == 1 and m.size == 0:
        raise InputError("matrix has no rows")
    if m.ndim != 2:
        raise InputError("matrix rows must be rectangular")
    for x in m.flat:
        if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
            raise InputError(f"matrix entry {x!r} is not an integer")
    return np.vectorize(int, otypes=[object])(m)


def _nonneg(m) -> bool:
    return all(x >= 0 for x in m.flat)


def _square(a, name):
    if a.shape[0] != a.shape[1]:
        raise ShapeMismatch(f"{name} is not square: {a.shape}")


def _mpow(a, n):
    out = np.identity(a.shape[0], dtype=int).astype(object)
    for _ in range(n):
        out = out.dot(a)
    return out


@dataclass(frozen=True)
class SEWitness:
    R: np.ndarray
    S: np.ndarray
    lag: int


@dataclass(frozen=True)
class MatrixCheck:
    valid: bool
    reason: str = ""
    step: int | None = None

    def __bool__(self):
        return self.valid


def verify_se_witness(A, B, w: SEWitness) -> MatrixCheck:
    A, B, R, S = map(as_matrix, (A, B, w.R, w.S))
    _square(A, "A")
    _square(B, "B")
    n, m = A.shape[0], B.shape[0]
    if R.shape != (n, m) or S.shape != (m, n):
        raise ShapeMismatch(f"R must be {n}x{m} and S {m}x{n}, got {R.shape} and {S.shape}")
    if w.lag < 1:
        return MatrixCheck(False, "lag must be a positive integer")
    if not (_nonneg(A) and _nonneg(B) and _nonneg(R) and _nonneg(S)):
        return MatrixCheck(False, "matrices must be nonnegative")
    checks = (
        ("AR = RB", A.dot(R), R.dot(B)),
        ("SA = BS", S.dot(A), B.dot(S)),
        (f"RS = A^{w.lag}", R.dot(S), _mpow(A, w.lag)),
        (f"SR = B^{w.lag}", S.dot(R), _mpow(B, w.lag)),
    )
    for name, lhs, rhs in checks:
        if not np.array_equal(lhs, rhs):
            return MatrixCheck(False, f"{name} fails")
    return MatrixCheck(True)


def verify_sse_step(A, B, R, S) -> MatrixCheck:
    A, B, R, S = map(as_matrix, (A, B, R, S))
    _square(A, "A")
    _square(B, "B")
    n, m = A.shape[0], B.shape[0]
    if R.shape != (n, m) or S.shape != (m, n):
        raise ShapeMismatch(f"R must be {n}x{m} and S {m}x{n}, got {R.shape} and {S.shape}")
    if not (_nonneg(R) and _nonneg(S)):
        return MatrixCheck(False, "R and S must be nonnegative")
    if not np.array_equal(R.dot(S), A):
        return MatrixCheck(False, "A != RS")
    if not np.array_equal(S.dot(R), B):
        return MatrixCheck(False, "B != SR")
    return MatrixCheck(True)


def verify_sse_chain(chain, A, B) -> MatrixCheck:
    """Each step ``(R_i, S_i)`` splits ``A_i = R_i S_i`` into ``A_{i+1} = S_i R_i``."""
    A, B = as_matrix(A), as_matrix(B)
    if not chain:
        if A.shape == B.shape and np.array_equal(A, B):
            return MatrixCheck(True)
        return MatrixCheck(False, "empty chain but A != B", step=0)
    current = A
    for i, (R, S) in enumerate(chain):
        R, S = as_matrix(R), as_matrix(S)
        if R.shape[0] != current.shape[0] or R.shape[1] != S.shape[0] or S.shape[1] != R.shape[0]:
            raise ShapeMismatch(f"step {i}: incompatible shapes {R.shape}, {S.shape} for {current.shape}")
        nxt = S.dot(R)
        res = verify_sse_step(current, nxt, R, S)
        if not res:
            return MatrixCheck(False, f"step {i}: {res.reason}", step=i)
        current = nxt
    if current.shape != B.shape or not np.array_equal(current, B):
        return MatrixCheck(False, "chain does not end at B", step=len(chain) - 1)
    return MatrixCheck(True)
