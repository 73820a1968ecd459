"""Harmonic parametric surfaces Y = (a, b, c) and their first-order geometry.

Distortions are returned squared so that everything stays rational:

    D_Y**2 = (|Y_x|^2 + |Y_y|^2)^2 / (4 |Y_x x Y_y|^2)

with the factor 2 of the classical definition kept in the denominator. Some
derivations drop that factor on both sides of an identity; it cancels there,
and this package uses the factor-2 form for surfaces and Gauss maps alike.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Tuple

from .errors import BranchPoint, InvalidDistortion, OutOfDomain
from .harmonic import HarmonicFunction, Poly2, to_analytic
from .rational import Q

Vec3 = Tuple[Fraction, Fraction, Fraction]
Point = Tuple[Fraction, Fraction]


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def norm_sq(u):
    return dot(u, u)


def scale(k, u):
    return (k * u[0], k * u[1], k * u[2])


def vsub(u, v):
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def vadd(u, v):
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def is_zero_vec(u) -> bool:
    return not (u[0] or u[1] or u[2])


@dataclass(frozen=True)
class Domain:
    x_lo: Fraction
    x_hi: Fraction
    y_lo: Fraction
    y_hi: Fraction

    def __post_init__(self):
        for name in ("x_lo", "x_hi", "y_lo", "y_hi"):
            object.__setattr__(self, name, Q(getattr(self, name)))
        if not (self.x_lo < self.x_hi and self.y_lo < self.y_hi):
            raise ValueError("domain must have positive side lengths")

    def contains(self, x, y) -> bool:
        return self.x_lo <= x <= self.x_hi and self.y_lo <= y <= self.y_hi

    def grid(self, nx: int, ny: int) -> list:
        """Rational grid nodes in row-major order (x varies fastest)."""
        if nx < 2 or ny < 2:
            raise ValueError("grid needs at least 2 nodes per axis")
        xs = [self.x_lo + (self.x_hi - self.x_lo) * Fraction(i, nx - 1) for i in range(nx)]
        ys = [self.y_lo + (self.y_hi - self.y_lo) * Fraction(j, ny - 1) for j in range(ny)]
        return [(x, y) for y in ys for x in xs]


UNIT_SQUARE = Domain(-1, 1, -1, 1)


@dataclass(frozen=True)
class HarmonicSurface:
    a: HarmonicFunction
    b: HarmonicFunction
    c: HarmonicFunction
    domain: Domain = field(default=UNIT_SQUARE)

    @property
    def coords(self) -> Tuple[HarmonicFunction, HarmonicFunction, HarmonicFunction]:
        return (self.a, self.b, self.c)

    def is_normalized(self) -> bool:
        return self.a == HarmonicFunction.coordinate_x()

    def check_point(self, pt) -> Point:
        x, y = Q(pt[0]), Q(pt[1])
        if not self.domain.contains(x, y):
            raise OutOfDomain((x, y))
        return x, y

    def position(self, pt) -> Vec3:
        x, y = self.check_point(pt)
        return tuple(h(x, y) for h in self.coords)

    # exact derivative vectors, no domain check; callers validate the point

    def _vec(self, funcs, x, y) -> Vec3:
        return (funcs[0](x, y), funcs[1](x, y), funcs[2](x, y))

    @cached_property
    def _d1(self):
        return (tuple(h.dx for h in self.coords), tuple(h.dy for h in self.coords))

    @cached_property
    def _d2(self):
        xs, ys = self._d1
        # harmonic: Y_yy = -Y_xx, but keep the honest derivative
        return (tuple(h.dx for h in xs), tuple(h.dy for h in xs), tuple(h.dy for h in ys))

    def first_derivatives(self, x, y) -> Tuple[Vec3, Vec3]:
        xs, ys = self._d1
        return self._vec(xs, x, y), self._vec(ys, x, y)

    def second_derivatives(self, x, y) -> Tuple[Vec3, Vec3, Vec3]:
        xx, xy, yy = self._d2
        return self._vec(xx, x, y), self._vec(xy, x, y), self._vec(yy, x, y)

    @cached_property
    def normal_field(self) -> Tuple[Poly2, Poly2, Poly2]:
        """Y_x x Y_y as three bivariate polynomials."""
        xs, ys = self._d1
        return cross(tuple(h.bivariate for h in xs), tuple(h.bivariate for h in ys))


@dataclass(frozen=True)
class TangentData:
    y_x: Vec3
    y_y: Vec3
    v: Vec3
    g_sq: Fraction
    energy: Fraction


def tangents(s: HarmonicSurface, pt) -> TangentData:
    x, y = s.check_point(pt)
    yx, yy = s.first_derivatives(x, y)
    v = cross(yx, yy)
    return TangentData(yx, yy, v, norm_sq(v), norm_sq(yx) + norm_sq(yy))


def is_branch_point(s: HarmonicSurface, pt) -> bool:
    return tangents(s, pt).g_sq == 0


def distortion_sq(s: HarmonicSurface, pt) -> Fraction:
    t = tangents(s, pt)
    if not t.g_sq:
        raise BranchPoint(s.check_point(pt))
    return t.energy ** 2 / (4 * t.g_sq)


def distortion_general(s: HarmonicSurface, pt) -> Fraction:
    """Squared distortion from gradients and the three 2x2 Jacobian minors.

    Deliberately avoids :func:`tangents` so it serves as a second code path.
    """
    x, y = s.check_point(pt)
    (ax, bx, cx), (ay, by, cy) = s.first_derivatives(x, y)
    grad_sum = ax * ax + ay * ay + bx * bx + by * by + cx * cx + cy * cy
    minors = (by * ax - ay * bx, -cy * ax + ay * cx, cy * bx - by * cx)
    m_sq = sum(m * m for m in minors)
    if not m_sq:
        raise BranchPoint((x, y))
    return grad_sum ** 2 / (4 * m_sq)


def is_isothermal(s: HarmonicSurface, pt) -> bool:
    t = tangents(s, pt)
    return norm_sq(t.y_x) == norm_sq(t.y_y) and dot(t.y_x, t.y_y) == 0


def is_K_quasiconformal(s: HarmonicSurface, grid: Iterable, k_bound) -> bool:
    """Pointwise test of |Y_x|^2 + |Y_y|^2 <= (K + 1/K) |Y_x x Y_y| on the grid (squared form)."""
    k = Q(k_bound)
    if k < 1:
        raise ValueError("K must be >= 1")
    bound_sq = (k + 1 / k) ** 2
    ok = True
    for pt in grid:
        t = tangents(s, pt)
        if not t.g_sq:
            raise BranchPoint(s.check_point(pt))
        if t.energy ** 2 > bound_sq * t.g_sq:
            ok = False
    return ok


def dilatation_from_distortion(d_sq) -> float:
    """Beltrami modulus d = (K - 1)/(K + 1) for distortion D = sqrt(d_sq).

    With D = (K + 1/K)/2 one gets d = sqrt((D - 1)/(D + 1)); D - 1 is formed as
    (d_sq - 1)/(sqrt(d_sq) + 1) so the result keeps full relative accuracy near 1.
    """
    d_sq = Q(d_sq)
    if d_sq < 1:
        raise InvalidDistortion(d_sq)
    excess = d_sq - 1
    if not excess:
        return 0.0
    big_d = math.sqrt(d_sq.numerator) / math.sqrt(d_sq.denominator)
    d_minus_1 = float(excess) / (big_d + 1)
    return math.sqrt(d_minus_1 / (d_minus_1 + 2))


def surface_from_polys(a: Poly2, b: Poly2, c: Poly2, domain: Domain = UNIT_SQUARE) -> HarmonicSurface:
    return HarmonicSurface(to_analytic(a, "a"), to_analytic(b, "b"), to_analytic(c, "c"), domain)


