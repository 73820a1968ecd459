import math
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import assume, given, settings

from harmgauss.errors import BranchPoint, InvalidDistortion, OutOfDomain
from harmgauss.harmonic import Poly2
from harmgauss.surface import (
    Domain, HarmonicSurface, dilatation_from_distortion, distortion_general, distortion_sq,
    is_branch_point, is_isothermal, is_K_quasiconformal, surface_from_polys, tangents,
)
from harmgauss.weierstrass import enneper, weierstrass_surface

from conftest import SX, SY, X, harmonic_surfaces, rationals, unit_rationals


def test_tangents_plane(plane):
    t = tangents(plane, (Fraction(1, 3), Fraction(-2, 5)))
    assert (t.y_x, t.y_y, t.v) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert (t.g_sq, t.energy) == (1, 2)


def test_tangents_saddle_against_symbolic(saddle):
    t = tangents(saddle, (1, 0))
    # oracle: differentiate (x, y, xy) in sympy, cross product by hand
    Ysym = sp.Matrix([SX, SY, SX * SY])
    yx = Ysym.diff(SX).subs({SX: 1, SY: 0})
    yy = Ysym.diff(SY).subs({SX: 1, SY: 0})
    assert t.y_x == tuple(yx) == (1, 0, 0)
    assert t.y_y == tuple(yy) == (0, 1, 1)
    assert t.v == tuple(yx.cross(yy)) == (0, -1, 1)
    assert (t.g_sq, t.energy) == (2, 3)


def test_rank_deficient_surface():
    s = surface_from_polys(X, X, Poly2())
    t = tangents(s, (0, 0))
    assert t.v == (0, 0, 0) and t.g_sq == 0
    assert is_branch_point(s, (0, 0))
    with pytest.raises(BranchPoint):
        distortion_sq(s, (0, 0))
    with pytest.raises(BranchPoint):
        distortion_general(s, (0, 0))


def test_out_of_domain(saddle):
    with pytest.raises(OutOfDomain):
        tangents(saddle, (2, 0))
    with pytest.raises(OutOfDomain):
        is_isothermal(saddle, (0, Fraction(-3, 2)))


def test_branch_point_examples(plane):
    assert not is_branch_point(plane, (0, 0))
    assert not is_branch_point(weierstrass_surface(enneper()), (0, 0))


def test_distortion_examples(plane, saddle):
    assert distortion_sq(plane, (Fraction(1, 2), Fraction(1, 7))) == 1
    assert distortion_sq(saddle, (1, 0)) == Fraction(9, 8)
    assert distortion_sq(saddle, (0, 0)) == 1
    assert distortion_general(plane, (0, 0)) == 1
    assert distortion_general(saddle, (1, 0)) == Fraction(9, 8)


def test_isothermal_examples(plane, saddle):
    assert is_isothermal(plane, (0, 0))
    assert not is_isothermal(saddle, (1, 0))
    enn = weierstrass_surface(enneper())
    for pt in enn.domain.grid(5, 5):
        assert is_isothermal(enn, pt)


def test_quasiconformal_examples(plane, saddle):
    square = Domain(0, 1, 0, 1)
    grid = square.grid(5, 5)
    assert is_K_quasiconformal(plane, grid, 1)
    s = HarmonicSurface(saddle.a, saddle.b, saddle.c, square)
    assert is_K_quasiconformal(s, grid, 2)
    assert not is_K_quasiconformal(s, grid, 1)
    # the worst grid node is the corner (1, 1): energy 4, g_sq 3
    assert max(distortion_sq(s, p) for p in grid) == Fraction(16, 12)


def test_quasiconformal_reports_branch_point():
    s = surface_from_polys(X, X, Poly2())
    with pytest.raises(BranchPoint) as info:
        is_K_quasiconformal(s, [(0, 0)], 3)
    assert info.value.point == (0, 0)


def test_dilatation_examples():
    assert dilatation_from_distortion(1) == 0.0
    assert dilatation_from_distortion(Fraction(25, 16)) == pytest.approx(1 / 3, rel=1e-12)
    # oracle: solve (K + 1/K)/2 = 3/(2 sqrt 2) for K >= 1, then (K-1)/(K+1)
    K = max(sp.solve(sp.Symbol("K") + 1 / sp.Symbol("K") - 3 / sp.sqrt(2), sp.Symbol("K")),
            key=lambda r: float(r))
    expected = float((K - 1) / (K + 1))
    assert expected == pytest.approx((math.sqrt(2) - 1) / (math.sqrt(2) + 1), rel=1e-14)
    assert dilatation_from_distortion(Fraction(9, 8)) == pytest.approx(expected, rel=1e-12)


def test_dilatation_rejects_small():
    with pytest.raises(InvalidDistortion):
        dilatation_from_distortion(Fraction(99, 100))


def test_dilatation_accurate_near_one():
    d_sq = 1 + Fraction(1, 10 ** 20)
    # d = sqrt((D-1)/(D+1)) ~ sqrt(eps/4) for d_sq = 1 + eps
    assert dilatation_from_distortion(d_sq) == pytest.approx(0.5e-10, rel=1e-12)


@given(rationals(50), rationals(50))
def test_dilatation_monotone(a, b):
    a, b = 1 + abs(a), 1 + abs(b)
    assume(a < b)
    assert dilatation_from_distortion(a) <= dilatation_from_distortion(b) < 1


@settings(max_examples=60, deadline=None)
@given(harmonic_surfaces(), unit_rationals(), unit_rationals())
def test_distortion_at_least_one_and_paths_agree(s, x, y):
    t = tangents(s, (x, y))
    assume(t.g_sq)
    d = distortion_sq(s, (x, y))
    assert d >= 1
    assert (d == 1) == is_isothermal(s, (x, y))
    assert distortion_general(s, (x, y)) == d
    assert t.energy ** 2 >= 4 * t.g_sq


ROTATION = ((Fraction(3, 5), Fraction(-4, 5), 0), (Fraction(4, 5), Fraction(3, 5), 0), (0, 0, 1))
ROTATION2 = ((1, 0, 0), (0, Fraction(5, 13), Fraction(-12, 13)), (0, Fraction(12, 13), Fraction(5, 13)))


def _rotate(s, R):
    coords = [sum((R[i][k] * s.coords[k] for k in range(3)), 0 * s.a) for i in range(3)]
    return HarmonicSurface(*coords, s.domain)


@settings(max_examples=40, deadline=None)
@given(harmonic_surfaces(), unit_rationals(), unit_rationals())
def test_rotation_invariance(s, x, y):
    r = _rotate(_rotate(s, ROTATION), ROTATION2)
    t, tr = tangents(s, (x, y)), tangents(r, (x, y))
    assert (t.energy, t.g_sq) == (tr.energy, tr.g_sq)
    if t.g_sq:
        assert distortion_sq(s, (x, y)) == distortion_sq(r, (x, y))


def test_domain_validation():
    with pytest.raises(ValueError):
        Domain(1, 1, 0, 1)
    g = Domain(0, 1, 0, 2).grid(2, 3)
    assert g == [(0, 0), (1, 0), (0, 1), (1, 1), (0, 2), (1, 2)]
