"""Gauss map of a harmonic surface.

Two independent routes to the Gauss-map distortion live here:

* the quotient-rule route (:func:`gauss_derivatives`), valid for any harmonic
  surface, which differentiates n = V/|V| with V = Y_x x Y_y exactly;
* the jet route (:func:`mn_quantities`, :func:`n_explicit`) for surfaces with
  a(x, y) = x, written in terms of the ten first/second derivatives of b and c.

Neither route assumes that the Gauss-map distortion equals the surface distortion.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .errors import (
    BranchPoint, DegenerateSurface, GaussDegenerate, NorthPole, NotNormalized,
)
from .harmonic import Poly2
from .surface import (
    HarmonicSurface, Vec3, cross, dot, is_zero_vec, norm_sq, scale, tangents, vadd, vsub,
)

NORTH_POLE_TOL = 1e-12


@dataclass(frozen=True)
class GaussJet:
    b_x: Fraction
    b_y: Fraction
    c_x: Fraction
    c_y: Fraction
    b_xx: Fraction
    b_xy: Fraction
    b_yy: Fraction
    c_xx: Fraction
    c_xy: Fraction
    c_yy: Fraction

    def is_harmonic(self) -> bool:
        return self.b_xx + self.b_yy == 0 and self.c_xx + self.c_yy == 0


@dataclass(frozen=True)
class MNQuantities:
    a_q: Fraction
    b_q: Fraction
    c_q: Fraction
    delta: Fraction
    gamma: Fraction
    m: Fraction
    g_sq: Fraction


def _require_normalized(s: HarmonicSurface):
    if not s.is_normalized():
        raise NotNormalized()


def jet(s: HarmonicSurface, pt) -> GaussJet:
    _require_normalized(s)
    x, y = s.check_point(pt)
    (_, b_x, c_x), (_, b_y, c_y) = s.first_derivatives(x, y)
    (_, b_xx, c_xx), (_, b_xy, c_xy), (_, b_yy, c_yy) = s.second_derivatives(x, y)
    return GaussJet(b_x, b_y, c_x, c_y, b_xx, b_xy, b_yy, c_xx, c_xy, c_yy)


def symbolic_jet(s: HarmonicSurface) -> GaussJet:
    """The jet with every entry a :class:`Poly2` in (x, y)."""
    _require_normalized(s)
    (_, bx, cx), (_, by, cy) = s._d1
    (_, bxx, cxx), (_, bxy, cxy), (_, byy, cyy) = s._d2
    return GaussJet(*(h.bivariate for h in (bx, by, cx, cy, bxx, bxy, byy, cxx, cxy, cyy)))


def m_unreduced(j: GaussJet):
    """M exactly as first displayed, before harmonicity is used to shorten it."""
    return (j.c_y ** 2 * (j.b_xy ** 2 - j.b_yy * j.b_xx)
            + j.b_y * j.c_y * (-2 * j.b_xy * j.c_xy + j.c_yy * j.b_xx + j.b_yy * j.c_xx)
            + j.b_y ** 2 * (j.c_xy ** 2 - j.c_yy * j.c_xx))


def m_reduced(j: GaussJet):
    a_q = j.b_xy ** 2 - j.b_yy * j.b_xx
    b_q = j.b_xy * j.c_xy + j.b_xx * j.c_xx
    c_q = j.c_xy ** 2 - j.c_yy * j.c_xx
    return j.c_y ** 2 * a_q - 2 * j.b_y * j.c_y * b_q + j.b_y ** 2 * c_q


def g_sq_of(j: GaussJet):
    return j.b_y ** 2 + j.c_y ** 2 + (j.c_y * j.b_x - j.b_y * j.c_x) ** 2


def mn_quantities(j: GaussJet) -> MNQuantities:
    a_q = j.b_xy ** 2 - j.b_yy * j.b_xx
    b_q = j.b_xy * j.c_xy + j.b_xx * j.c_xx
    c_q = j.c_xy ** 2 - j.c_yy * j.c_xx
    delta = 1 + j.b_x ** 2 + j.c_x ** 2
    gamma = 1 + j.b_x ** 2 + j.b_y ** 2 + j.c_x ** 2 + j.c_y ** 2
    return MNQuantities(a_q, b_q, c_q, delta, gamma, m_unreduced(j), g_sq_of(j))


def n_explicit(j: GaussJet):
    """N transcribed term for term from the long unreduced display.

    Works on Fractions or on Poly2 entries (see :func:`symbolic_jet`).
    """
    bx, by, cx, cy = j.b_x, j.b_y, j.c_x, j.c_y
    bxx, bxy, byy = j.b_xx, j.b_xy, j.b_yy
    cxx, cxy, cyy = j.c_xx, j.c_xy, j.c_yy
    d = 1 + bx ** 2 + cx ** 2
    t1 = cy ** 4 * (bxy ** 2 + bxx ** 2)
    t2 = by ** 2 * (cyy ** 2 * d - 2 * by * cyy * bx * cxy
                     + (1 + by ** 2 + bx ** 2 + cx ** 2) * cxy ** 2
                     - 2 * by * bx * cxy * cxx + by ** 2 * cxx ** 2)
    t3 = -2 * cy ** 3 * (byy * cx * bxy + cx * bxy * bxx + by * (bxy * cxy + bxx * cxx))
    t4 = -2 * by * cy * (d * bxy * cxy
                         + byy * (cyy * d - by * bx * cxy)
                         + by ** 2 * (bxy * cxy + bxx * cxx)
                         - by * (cyy * (bx * bxy - cx * cxy) - cx * cxy * cxx
                                 + bx * (cxy * bxx + bxy * cxx)))
    t5 = cy ** 2 * (byy ** 2 * d + d * bxy ** 2
                    + 2 * by * byy * (-bx * bxy + cx * cxy)
                    + by ** 2 * (bxy ** 2 + cxy ** 2 + bxx ** 2 + cxx ** 2)
                    + 2 * by * (cyy * cx * bxy - bx * bxy * bxx + cx * (cxy * bxx + bxy * cxx)))
    return t1 + t2 + t3 + t4 + t5


def normal(s: HarmonicSurface, pt) -> Tuple[float, float, float]:
    t = tangents(s, pt)
    if not t.g_sq:
        raise BranchPoint(s.check_point(pt))
    length = math.sqrt(t.g_sq.numerator) / math.sqrt(t.g_sq.denominator)
    return tuple(float(c) / length for c in t.v)


def stereographic(n) -> complex:
    x1, x2, x3 = (float(c) for c in n)
    if abs(1.0 - x3) <= NORTH_POLE_TOL:
        raise NorthPole()
    return complex(x1 / (1.0 - x3), x2 / (1.0 - x3))


def complex_gauss(s: HarmonicSurface, pt) -> complex:
    return stereographic(normal(s, pt))


@dataclass(frozen=True)
class GaussDerivatives:
    """Exact pieces of P = n_x and Q = n_y at a regular point.

    With g = |V|^2: |P|^2 + |Q|^2 = sum_sq_num / g^2 and P x Q = cross_num / g^3.
    """

    v: Vec3
    g: Fraction
    sum_sq_num: Fraction
    cross_num: Vec3

    @property
    def pq_sum_sq(self) -> Fraction:
        return self.sum_sq_num / self.g ** 2

    @property
    def cross_sq(self) -> Fraction:
        return norm_sq(self.cross_num) / self.g ** 6

    @property
    def degenerate(self) -> bool:
        return is_zero_vec(self.cross_num)


def gauss_derivatives(s: HarmonicSurface, pt) -> GaussDerivatives:
    x, y = s.check_point(pt)
    yx, yy = s.first_derivatives(x, y)
    yxx, yxy, yyy = s.second_derivatives(x, y)
    v = cross(yx, yy)
    g = norm_sq(v)
    if not g:
        raise BranchPoint((x, y))
    v_x = vadd(cross(yxx, yy), cross(yx, yxy))
    v_y = vadd(cross(yxy, yy), cross(yx, yyy))
    vvx, vvy = dot(v, v_x), dot(v, v_y)
    # |P|^2 = (|V_x|^2 g - <V,V_x>^2) / g^2, likewise Q
    sum_sq_num = norm_sq(v_x) * g - vvx ** 2 + norm_sq(v_y) * g - vvy ** 2
    # P x Q = [V_x x V_y g^2 - V_x x V <V,V_y> g - V x V_y <V,V_x> g] / g^3
    cross_num = vsub(vsub(scale(g * g, cross(v_x, v_y)),
                          scale(vvy * g, cross(v_x, v))),
                     scale(vvx * g, cross(v, v_y)))
    return GaussDerivatives(v, g, sum_sq_num, cross_num)


def gauss_distortion_sq(s: HarmonicSurface, pt) -> Fraction:
    """Squared Gauss-map distortion (|P|^2 + |Q|^2)^2 / (4 |P x Q|^2), exact."""
    gd = gauss_derivatives(s, pt)
    if gd.degenerate:
        raise GaussDegenerate(s.check_point(pt))
    return gd.sum_sq_num ** 2 * gd.g ** 2 / (4 * norm_sq(gd.cross_num))


def gauss_regular(s: HarmonicSurface, pt) -> bool:
    _require_normalized(s)
    if not tangents(s, pt).g_sq:
        raise BranchPoint(s.check_point(pt))
    return m_unreduced(jet(s, pt)) != 0


def curvature_sign(s: HarmonicSurface, pt) -> Fraction:
    """<Y_xx,V><Y_yy,V> - <Y_xy,V>^2: same sign as the Gauss curvature."""
    x, y = s.check_point(pt)
    yx, yy = s.first_derivatives(x, y)
    v = cross(yx, yy)
    if is_zero_vec(v):
        raise BranchPoint((x, y))
    yxx, yxy, yyy = s.second_derivatives(x, y)
    return dot(yxx, v) * dot(yyy, v) - dot(yxy, v) ** 2


def m_polynomial(s: HarmonicSurface) -> Poly2:
    return m_unreduced(symbolic_jet(s))


@dataclass(frozen=True)
class Planar:
    direction: Vec3
    reference: Tuple[Fraction, Fraction]

    @property
    def normal(self) -> Tuple[float, float, float]:
        n = math.sqrt(norm_sq(self.direction))
        return tuple(float(c) / n for c in self.direction)


@dataclass(frozen=True)
class NonPlanar:
    reference: Tuple[Fraction, Fraction]
    witness: Tuple[Fraction, Fraction]


def _probe_points(s: HarmonicSurface, degree: int):
    # a nonzero polynomial of total degree d cannot vanish on a (d+1)x(d+1) product grid
    dom = s.domain
    n = max(degree, 0) + 1
    xs = [dom.x_lo + (dom.x_hi - dom.x_lo) * Fraction(k + 1, n + 1) for k in range(n)]
    ys = [dom.y_lo + (dom.y_hi - dom.y_lo) * Fraction(k + 1, n + 1) for k in range(n)]
    return [(x, y) for y in ys for x in xs], n


def _canonical_sign(v: Vec3) -> Vec3:
    for c in reversed(v):
        if c:
            return v if c > 0 else scale(-1, v)
    return v


def planarity_classify(s: HarmonicSurface):
    """Exact decision of whether the unit normal is constant (up to sign).

    Expands V(x, y) x V(x0, y0) as polynomials for a regular reference point
    (x0, y0); the surface is planar iff all three components vanish identically.
    The normal of a planar surface flips sign across curves where V = 0, so the
    reported direction is canonicalized with its last nonzero component positive.
    """
    field = s.normal_field
    if all(p.is_zero() for p in field):
        raise DegenerateSurface()
    degree = max(p.degree for p in field)
    probes, _ = _probe_points(s, degree)
    ref = v0 = None
    for pt in probes:
        v = tuple(p(*pt) for p in field)
        if not is_zero_vec(v):
            ref, v0 = pt, v
            break
    assert ref is not None, "nonzero polynomial vanished on its probe grid"
    residual = cross(field, v0)
    if all(p.is_zero() for p in residual):
        return Planar(_canonical_sign(v0), ref)
    rdeg = max(p.degree for p in residual)
    witness_pts, _ = _probe_points(s, rdeg)
    for pt in witness_pts:
        if not is_zero_vec(tuple(p(*pt) for p in residual)):
            return NonPlanar(ref, pt)
    raise AssertionError("nonzero residual vanished on its probe grid")


def m_witness(s: HarmonicSurface) -> Optional[Tuple[Fraction, Fraction]]:
    """A regular point with M != 0, or None when M vanishes identically."""
    mp = m_polynomial(s)
    if mp.is_zero():
        return None
    field = s.normal_field
    g_poly = sum((p * p for p in field), Poly2())
    probes, _ = _probe_points(s, mp.degree + g_poly.degree)
    for pt in probes:
        if mp(*pt) != 0 and g_poly(*pt) != 0:
            return pt
    raise AssertionError("M * |V|^2 vanished on its probe grid")
