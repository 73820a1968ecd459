"""Exact rational and complex-rational scalars.

Rationals are plain :class:`fractions.Fraction` values (always reduced, positive
denominator). :class:`CQ` adds the Gaussian-rational field on top.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Number = Union[int, Fraction]


def Q(value) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction.

    Floats are rejected: they would silently smuggle rounding into exact code.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    if "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text)


def format_rational(value: Number) -> str:
    """Render as ``num/den``; integers keep an explicit ``/1``."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class CQ:
    """Complex number with exact rational parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Q(self.re))
        object.__setattr__(self, "im", Q(self.im))

    @classmethod
    def of(cls, value) -> "CQ":
        if isinstance(value, CQ):
            return value
        if isinstance(value, complex):
            raise TypeError("complex floats are not exact")
        return cls(Q(value), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __add__(self, other) -> "CQ":
        other = CQ.of(other)
        return CQ(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "CQ":
        return CQ(-self.re, -self.im)

    def __sub__(self, other) -> "CQ":
        return self + (-CQ.of(other))

    def __rsub__(self, other) -> "CQ":
        return CQ.of(other) - self

    def __mul__(self, other) -> "CQ":
        other = CQ.of(other)
        return CQ(self.re * other.re - self.im * other.im,
                  self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def conjugate(self) -> "CQ":
        return CQ(self.re, -self.im)

    def abs_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other) -> "CQ":
        other = CQ.of(other)
        d = other.abs_sq()
        if not d:
            raise ZeroDivisionError("complex rational division by zero")
        n = self * other.conjugate()
        return CQ(n.re / d, n.im / d)

    def __rtruediv__(self, other) -> "CQ":
        return CQ.of(other) / self

    def __pow__(self, n: int) -> "CQ":
        if n < 0:
            return CQ(1) / (self ** -n)
        out, base = CQ(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CQ.of(other)
        if not isinstance(other, CQ):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"CQ({self.re}, {self.im})"


I = CQ(0, 1)
