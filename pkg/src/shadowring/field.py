"""Exact coefficient fields: the rationals and prime fields F_p.

Rational scalars are :class:`fractions.Fraction`.  Prime-field scalars are
:class:`ModP` values, which support the usual arithmetic operators so the
polynomial code can stay field-agnostic.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, ParseError

_RATIONAL = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class ModP:
    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other) -> int | None:
        if isinstance(other, ModP):
            if other.p != self.p:
                raise DomainError(f"cannot mix F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return ModP(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        return ModP(self._coerce(other), self.p) / self

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __pos__(self):
        return self

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.v == other.v
        if isinstance(other, (int, Fraction)):
            try:
                return self.v == self._coerce(other) % self.p
            except ValueError:  # denominator divisible by p
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"ModP({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class Field:
    """Base class; subclasses convert Python numbers into field elements."""

    characteristic: int = 0
    name: str = ""

    def __call__(self, x) -> object:
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def parse(self, text: str):
        m = _RATIONAL.match(text)
        if not m:
            raise ParseError(f"not an exact rational scalar: {text!r}", text, 0)
        num, den = int(m.group(1)), int(m.group(2) or 1)
        if den == 0:
            raise ParseError("zero denominator", text, text.index("/"))
        return self(Fraction(num, den))

    def format(self, x) -> str:
        return str(x)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, Field) and self.characteristic == other.characteristic

    def __hash__(self):
        return hash(("field", self.characteristic))


class RationalField(Field):
    characteristic = 0
    name = "QQ"

    def __call__(self, x) -> Fraction:
        if isinstance(x, ModP):
            raise DomainError("cannot lift an F_p element to the rationals")
        if isinstance(x, float):
            raise DomainError("floating-point scalars are not accepted")
        return Fraction(x)


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise DomainError(f"{p} is not prime")
        self.characteristic = p
        self.name = f"GF({p})"

    def __call__(self, x) -> ModP:
        if isinstance(x, ModP):
            if x.p != self.characteristic:
                raise DomainError(f"cannot move an F_{x.p} element into {self.name}")
            return x
        if isinstance(x, float):
            raise DomainError("floating-point scalars are not accepted")
        x = Fraction(x)
        if x.denominator % self.characteristic == 0:
            raise DomainError(f"{x} has no image in {self.name}")
        return ModP(x.numerator * pow(x.denominator, -1, self.characteristic), self.characteristic)


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_name(name: str) -> Field:
    """``"QQ"``/``"Q"``/``"0"`` for the rationals, a prime or ``"GF(p)"`` for F_p."""
    name = name.strip()
    if name.upper() in ("Q", "QQ", "0", "RATIONALS"):
        return QQ
    m = re.fullmatch(r"(?:GF\((\d+)\)|F_?(\d+)|(\d+))", name, flags=re.IGNORECASE)
    if not m:
        raise DomainError(f"unknown field {name!r}; use QQ or a prime p")
    return GF(int(next(g for g in m.groups() if g)))


def format_rational(x: Fraction) -> str:
    """``p/q`` in lowest terms with q > 0; integers print without a denominator."""
    return str(Fraction(x))
