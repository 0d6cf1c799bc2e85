"""Exact coefficient fields: the rationals and prime fields GF(p)."""

from __future__ import annotations

from fractions import Fraction

from sympy import isprime

from .errors import InputError, MalformedScalar


class RationalField:
    name = "QQ"

    def __call__(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            try:
                return Fraction(value)
            except ValueError:
                raise MalformedScalar(f"not a rational number: {value!r}") from None
        raise MalformedScalar(f"cannot coerce {value!r} to a rational")

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    @staticmethod
    def format(c) -> str:
        return str(c)


class PrimeField:
    def __init__(self, p: int):
        if not isprime(p):
            raise InputError(f"GF({p}): modulus must be prime")
        self.p = p
        self.name = f"GF({p})"

    def __call__(self, value):
        if isinstance(value, GFElement):
            if value.p != self.p:
                raise MalformedScalar(f"element of GF({value.p}) used in GF({self.p})")
            return value
        if isinstance(value, str):
            try:
                value = Fraction(value)
            except ValueError:
                raise MalformedScalar(f"not a rational number: {value!r}") from None
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise MalformedScalar(f"denominator of {value} vanishes in GF({self.p})")
            return GFElement(value.numerator * pow(value.denominator, -1, self.p), self.p)
        if isinstance(value, int):
            return GFElement(value, self.p)
        raise MalformedScalar(f"cannot coerce {value!r} to GF({self.p})")

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return self.name

    def format(self, c) -> str:
        # symmetric representative prints -1 rather than p-1
        v = c.value
        return str(v - self.p if v > self.p // 2 else v)


class GFElement:
    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, GFElement):
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else GFElement(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else GFElement(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else GFElement(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else GFElement(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.value * pow(o, -1, self.p), self.p)

    def __neg__(self):
        return GFElement(-self.value, self.p)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return (self.value - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"{self.value} mod {self.p}"


QQ = RationalField()


def field_from_spec(spec: str):
    """``"q"`` (or ``"QQ"``) for the rationals, ``"gf7"`` for GF(7)."""
    s = spec.strip().lower()
    if s in ("q", "qq"):
        return QQ
    if s.startswith("gf"):
        body = s[2:].strip("()")
        if body.isdigit():
            return PrimeField(int(body))
    raise InputError(f"unknown field {spec!r} (use q or gf<p>)")
