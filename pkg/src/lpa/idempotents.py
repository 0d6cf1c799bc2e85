"""Homogeneous idempotents and graded algebraic equivalence witnesses.

Two homogeneous idempotents ``p``, ``q`` are graded equivalent when there
are homogeneous ``x`` of degree ``n`` and ``y`` of degree ``-n`` with
``xy = p`` and ``yx = q``.  Replacing ``(x, y)`` by ``(pxq, qyp)`` puts
the witnesses in the corners ``pRq`` and ``qRp`` without changing the
products.  This module only *verifies* such witnesses; it never searches.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Element
from .errors import NotHomogeneous, NotIdempotent, ProductMismatch


@dataclass(frozen=True)
class IdempotentCheck:
    ok: bool
    degree: int | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class EquivWitness:
    x: Element
    y: Element
    shift: int

    def swap(self) -> "EquivWitness":
        return EquivWitness(self.y, self.x, -self.shift)


@dataclass(frozen=True)
class EquivCheck:
    valid: bool
    reason: str = ""
    shift: int | None = None
    in_corners: bool = False

    def __bool__(self):
        return self.valid


def is_homogeneous_idempotent(p: Element) -> IdempotentCheck:
    if not p.is_homogeneous():
        return IdempotentCheck(False, reason="not homogeneous")
    if p * p != p:
        return IdempotentCheck(False, reason="not idempotent")
    # a nonzero homogeneous idempotent has degree 0: deg(p^2) = 2 deg(p)
    return IdempotentCheck(True, degree=0)


def _require_idempotent(*elems):
    for p in elems:
        res = is_homogeneous_idempotent(p)
        if not res:
            raise NotIdempotent(f"{p}: {res.reason}")


def check_orthogonal(p: Element, q: Element) -> bool:
    _require_idempotent(p, q)
    return not (p * q) and not (q * p)


def check_leq(p: Element, q: Element) -> bool:
    _require_idempotent(p, q)
    if p * q != p or q * p != p:
        return False
    rest = q - p
    # q - p is again a homogeneous idempotent orthogonal to p
    assert is_homogeneous_idempotent(rest), f"{rest} should be idempotent"
    assert not (rest * p) and not (p * rest), f"{rest} should be orthogonal to {p}"
    return True


def _homogeneous_of(a: Element, n: int) -> bool:
    return a.is_homogeneous(n)


def verify_graded_equiv(p: Element, q: Element, w: EquivWitness) -> EquivCheck:
    _require_idempotent(p, q)
    x, y, n = w.x, w.y, w.shift
    if not _homogeneous_of(x, n):
        return EquivCheck(False, f"x is not homogeneous of degree {n}")
    if not _homogeneous_of(y, -n):
        return EquivCheck(False, f"y is not homogeneous of degree {-n}")
    if x * y != p:
        return EquivCheck(False, "x*y != p")
    if y * x != q:
        return EquivCheck(False, "y*x != q")
    corners = p * x * q == x and q * y * p == y
    return EquivCheck(True, shift=n, in_corners=corners)


def check_equiv_degree_zero(p: Element, q: Element, x: Element, y: Element) -> EquivCheck:
    """Plain algebraic equivalence of ``p`` and ``q`` inside the degree-0 component."""
    if not (x.is_homogeneous(0) and y.is_homogeneous(0)):
        return EquivCheck(False, "witness outside the degree-0 component")
    if x * y != p:
        return EquivCheck(False, "x*y != p")
    if y * x != q:
        return EquivCheck(False, "y*x != q")
    return EquivCheck(True, shift=0, in_corners=p * x * q == x and q * y * p == y)


def normalize_witnesses(p: Element, q: Element, x: Element, y: Element) -> EquivWitness:
    """Return ``(pxq, qyp)``, which realize the same equivalence from the corners."""
    if x * y != p or y * x != q:
        raise ProductMismatch("witnesses do not satisfy x*y = p and y*x = q")
    d = x.degree()
    if not x.is_homogeneous():
        raise NotHomogeneous(f"x = {x} is not homogeneous")
    shift = 0 if d is None else d
    x2, y2 = p * x * q, q * y * p
    if x2 * y2 != p or y2 * x2 != q:
        raise AssertionError("corner witnesses lost the products (bug)")
    return EquivWitness(x2, y2, shift)


def witness_from_path(algebra, path) -> tuple:
    """For a nonempty path ``m``: ``(m m*, r(m), EquivWitness(m, m*, |m|))``."""
    m = algebra.path(path)
    return m * m.star(), algebra.vertex(algebra.graph.rng[path[-1]]), EquivWitness(m, m.star(), len(path))
