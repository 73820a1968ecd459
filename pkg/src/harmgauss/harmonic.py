"""Planar harmonic polynomials.

A harmonic polynomial h is stored through an analytic polynomial F with
h(x, y) = Re F(x + iy). Differentiation and conjugation are then coefficient
operations on F, and every value is an exact rational.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import comb
from typing import Dict, Iterable, Mapping, Tuple

from .errors import NotHarmonic
from .rational import CQ, I, Q

# Re(w * i^k) for w = re + i*im, indexed by k mod 4
_RE_TIMES_I_POW = (
    lambda re, im: re,
    lambda re, im: -im,
    lambda re, im: -re,
    lambda re, im: im,
)
_NEG_I_POW = (CQ(1), CQ(0, -1), CQ(-1), CQ(0, 1))


def _trim(coeffs: Iterable[CQ]) -> Tuple[CQ, ...]:
    out = [CQ.of(c) for c in coeffs]
    while out and not out[-1]:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class AnalyticPolynomial:
    """Polynomial in one complex variable; ``coeffs[n]`` multiplies z**n."""

    coeffs: Tuple[CQ, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def monomial(cls, n: int, c=1) -> "AnalyticPolynomial":
        return cls((CQ(0),) * n + (CQ.of(c),))

    @classmethod
    def const(cls, c) -> "AnalyticPolynomial":
        return cls((CQ.of(c),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, n: int) -> CQ:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else CQ(0)

    def __add__(self, other) -> "AnalyticPolynomial":
        other = _as_analytic(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return AnalyticPolynomial(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "AnalyticPolynomial":
        return AnalyticPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "AnalyticPolynomial":
        return self + (-_as_analytic(other))

    def __rsub__(self, other) -> "AnalyticPolynomial":
        return _as_analytic(other) - self

    def __mul__(self, other) -> "AnalyticPolynomial":
        other = _as_analytic(other)
        if self.is_zero() or other.is_zero():
            return AnalyticPolynomial()
        out = [CQ(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return AnalyticPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "AnalyticPolynomial":
        out = AnalyticPolynomial.const(1)
        for _ in range(n):
            out = out * self
        return out

    def derivative(self) -> "AnalyticPolynomial":
        return AnalyticPolynomial(c * n for n, c in enumerate(self.coeffs) if n)

    def antiderivative(self) -> "AnalyticPolynomial":
        """Antiderivative vanishing at z = 0."""
        return AnalyticPolynomial((CQ(0),) + tuple(c * Fraction(1, n + 1) for n, c in enumerate(self.coeffs)))

    def __call__(self, z) -> CQ:
        z = CQ.of(z)
        acc = CQ(0)
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __repr__(self) -> str:
        return f"AnalyticPolynomial({[(str(c.re), str(c.im)) for c in self.coeffs]})"


def _as_analytic(value) -> AnalyticPolynomial:
    if isinstance(value, AnalyticPolynomial):
        return value
    return AnalyticPolynomial.const(value)


class Poly2:
    """Bivariate polynomial with exact rational coefficients.

    ``terms`` maps (i, j) to the coefficient of x**i * y**j; zeros are never stored.
    Supports ring arithmetic with ints and Fractions so formula code can run on
    either point values or whole polynomials.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Tuple[int, int], object] | None = None):
        clean: Dict[Tuple[int, int], Fraction] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in term {(i, j)}")
            c = Q(c)
            if c:
                clean[(int(i), int(j))] = clean.get((int(i), int(j)), Fraction(0)) + c
        self._terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def const(cls, c) -> "Poly2":
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> "Poly2":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "Poly2":
        return cls({(0, 1): 1})

    @property
    def terms(self) -> Dict[Tuple[int, int], Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        return max((i + j for i, j in self._terms), default=-1)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly2.const(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other) -> "Poly2":
        other = _as_poly2(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return Poly2(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly2":
        return Poly2({k: -v for k, v in self._terms.items()})

    def __sub__(self, other) -> "Poly2":
        other = _as_poly2(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Poly2":
        return _as_poly2(other) - self

    def __mul__(self, other) -> "Poly2":
        other = _as_poly2(other)
        if other is NotImplemented:
            return other
        out: Dict[Tuple[int, int], Fraction] = {}
        for (i1, j1), a in self._terms.items():
            for (i2, j2), b in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, Fraction(0)) + a * b
        return Poly2(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly2":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out, base = Poly2.const(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def dx(self) -> "Poly2":
        return Poly2({(i - 1, j): c * i for (i, j), c in self._terms.items() if i})

    def dy(self) -> "Poly2":
        return Poly2({(i, j - 1): c * j for (i, j), c in self._terms.items() if j})

    def laplacian(self) -> "Poly2":
        return self.dx().dx() + self.dy().dy()

    def __call__(self, x, y) -> Fraction:
        x, y = Q(x), Q(y)
        return sum((c * x ** i * y ** j for (i, j), c in self._terms.items()), Fraction(0))

    def shift(self, dx=0, dy=0) -> "Poly2":
        """Return q with q(x, y) = self(x + dx, y + dy)."""
        X = Poly2.x() + Q(dx)
        Y = Poly2.y() + Q(dy)
        out = Poly2()
        for (i, j), c in self._terms.items():
            out = out + c * X ** i * Y ** j
        return out

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self.sorted_terms():
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v for v, e in (("x", i), ("y", j)) if e
            )
            coeff = str(abs(c))
            if mono:
                body = mono if abs(c) == 1 else f"{coeff}*{mono}"
            else:
                body = coeff
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"Poly2({self})"


def _as_poly2(value):
    if isinstance(value, Poly2):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Poly2.const(value)
    return NotImplemented


# alias used for user-supplied (not yet gated) input
BivariatePolynomial = Poly2


@dataclass(frozen=True)
class HarmonicFunction:
    """h(x, y) = Re F(x + iy) for an analytic polynomial F.

    The imaginary part of F's constant term carries no information about h and
    is normalized to zero, so two equal harmonic functions have equal F.
    """

    analytic: AnalyticPolynomial

    def __post_init__(self):
        F = self.analytic
        if not isinstance(F, AnalyticPolynomial):
            F = AnalyticPolynomial(F)
        if F.coeffs and F.coeffs[0].im:
            F = AnalyticPolynomial((CQ(F.coeffs[0].re),) + F.coeffs[1:])
        object.__setattr__(self, "analytic", F)

    @classmethod
    def const(cls, c) -> "HarmonicFunction":
        return cls(AnalyticPolynomial.const(c))

    @classmethod
    def coordinate_x(cls) -> "HarmonicFunction":
        return cls(AnalyticPolynomial.monomial(1))

    @classmethod
    def coordinate_y(cls) -> "HarmonicFunction":
        # y = Re(-i z)
        return cls(AnalyticPolynomial.monomial(1, CQ(0, -1)))

    @classmethod
    def real_part(cls, F: AnalyticPolynomial) -> "HarmonicFunction":
        return cls(F)

    @property
    def degree(self) -> int:
        return self.analytic.degree

    def is_zero(self) -> bool:
        return self.analytic.is_zero()

    def __call__(self, x, y) -> Fraction:
        return self.analytic(CQ(Q(x), Q(y))).re

    eval = __call__

    @cached_property
    def dx(self) -> "HarmonicFunction":
        return HarmonicFunction(self.analytic.derivative())

    @cached_property
    def dy(self) -> "HarmonicFunction":
        return HarmonicFunction(self.analytic.derivative() * I)

    def conjugate(self) -> "HarmonicFunction":
        # h + i*h~ = F, so h~ = Im F = Re(-iF)
        return HarmonicFunction(self.analytic * CQ(0, -1))

    def __add__(self, other) -> "HarmonicFunction":
        if isinstance(other, HarmonicFunction):
            return HarmonicFunction(self.analytic + other.analytic)
        return HarmonicFunction(self.analytic + CQ.of(Q(other)))

    __radd__ = __add__

    def __neg__(self) -> "HarmonicFunction":
        return HarmonicFunction(-self.analytic)

    def __sub__(self, other) -> "HarmonicFunction":
        return self + (-other)

    def __mul__(self, scalar) -> "HarmonicFunction":
        # only real scalars keep h harmonic with the same meaning
        return HarmonicFunction(self.analytic * CQ.of(Q(scalar)))

    __rmul__ = __mul__

    @cached_property
    def bivariate(self) -> Poly2:
        """Expand Re F(x + iy) into monomials x^i y^j."""
        terms: Dict[Tuple[int, int], Fraction] = {}
        for n, a in enumerate(self.analytic.coeffs):
            for k in range(n + 1):
                c = comb(n, k) * _RE_TIMES_I_POW[k % 4](a.re, a.im)
                if c:
                    terms[(n - k, k)] = terms.get((n - k, k), Fraction(0)) + c
        return Poly2(terms)

    def __repr__(self) -> str:
        return f"HarmonicFunction({self.bivariate})"


def eval_harmonic(h: HarmonicFunction, point) -> Fraction:
    x, y = point
    return h(x, y)


def partial_x(h: HarmonicFunction) -> HarmonicFunction:
    return h.dx


def partial_y(h: HarmonicFunction) -> HarmonicFunction:
    return h.dy


def conjugate(h: HarmonicFunction) -> HarmonicFunction:
    return h.conjugate()


def harmonic_residual(p: Poly2) -> Poly2:
    """p_xx + p_yy; the zero polynomial exactly when p is harmonic."""
    return p.laplacian()


def to_analytic(p: Poly2, label: str = "") -> HarmonicFunction:
    """Recover F with Re F(x + iy) = p(x, y) via F(z) = 2 p(z/2, -iz/2) - p(0, 0).

    Raises NotHarmonic (carrying the Laplacian) when p is not harmonic.
    """
    residual = harmonic_residual(p)
    if not residual.is_zero():
        raise NotHarmonic(residual, label)
    coeffs: Dict[int, CQ] = {}
    for (i, j), c in p.terms.items():
        w = _NEG_I_POW[j % 4] * (2 * c / Fraction(2) ** (i + j))
        coeffs[i + j] = coeffs.get(i + j, CQ(0)) + w
    coeffs[0] = coeffs.get(0, CQ(0)) - p(0, 0)
    top = max(coeffs, default=-1)
    return HarmonicFunction(AnalyticPolynomial(coeffs.get(n, CQ(0)) for n in range(top + 1)))
