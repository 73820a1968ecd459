import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from harmgauss.gauss import NonPlanar, Planar, planarity_classify
from harmgauss.harmonic import Poly2
from harmgauss.report import VerificationReport, jsonable
from harmgauss.rational import CQ
from harmgauss.surface import UNIT_SQUARE, surface_from_polys
from harmgauss.verify import (
    POINT_DENOMINATOR_MAX, RandomSurfaceSpec, case_seeds, curvature_sign_suite,
    dilatation_bridge_check, fd_convergence_ratio, n_identity_suite, random_point, random_surface,
    branch_line_counterexample, distortion_identity_suite, fd_bridge_suite, distortion_identity_surface_check,
    planar_family_suite,
)

from conftest import X, Y


def test_random_surface_is_deterministic():
    spec = RandomSurfaceSpec(degree=4, height=10, seed=42)
    assert random_surface(spec) == random_surface(spec)
    assert random_surface(spec) != random_surface(RandomSurfaceSpec(4, 10, 43))


def test_random_surface_respects_config():
    s = random_surface(RandomSurfaceSpec(degree=3, height=5, seed=9, normalized=True))
    assert s.is_normalized()
    for h in (s.b, s.c):
        assert h.analytic.degree <= 3
        for c in h.analytic.coeffs:
            assert abs(c.re.numerator) <= 5 and abs(c.im.numerator) <= 5


@given(st.integers(0, 2 ** 32))
def test_random_points_in_domain(seed):
    x, y = random_point(random.Random(seed), UNIT_SQUARE)
    assert UNIT_SQUARE.contains(x, y)
    assert x.denominator <= POINT_DENOMINATOR_MAX and y.denominator <= POINT_DENOMINATOR_MAX


def test_case_seeds_prefix_stable():
    assert case_seeds(5, 3) == case_seeds(5, 10)[:3]


def test_report_accounting():
    r = VerificationReport("demo", {"k": 1})
    r.cases.append({"id": 0})
    r.add(0, (Fraction(1, 2), 0), "pass", value=Fraction(1, 3))
    r.add(0, (0, 0), "skip", reason="branch")
    r.add(0, (1, 1), "fail")
    assert r.summary == {"cases": 1, "points": 3, "passed": 1, "failures": 1, "skipped": 1}
    assert not r.ok
    with pytest.raises(ValueError):
        r.add(0, (0, 0), "maybe")
    other = VerificationReport("demo", {})
    other.cases.append({"id": 0})
    other.add(0, (0, 0), "pass")
    r.merge(other)
    assert r.records[-1]["case"] == 1
    assert '"1/3"' in r.to_json()


def test_jsonable_encodings():
    assert jsonable(Fraction(-2, 4)) == "-1/2"
    assert jsonable(CQ(1, Fraction(1, 3))) == {"re": "1/1", "im": "1/3"}
    assert jsonable((1, [Fraction(1)])) == [1, ["1/1"]]


def test_identity_suite_small():
    r = distortion_identity_suite(10, RandomSurfaceSpec(4, 10, 3), 4)
    assert r.summary["points"] == 40 and r.ok


def test_identity_suite_general_surfaces():
    r = distortion_identity_suite(10, RandomSurfaceSpec(4, 10, 3, normalized=False), 4)
    assert r.ok and r.summary["passed"] > 0


def test_planar_surface_points_are_skipped():
    r = distortion_identity_surface_check(surface_from_polys(X, Y, X + Y), [(0, 0), (Fraction(1, 2), 0)])
    assert r.summary["skipped"] == 2 and r.ok


def test_branch_points_are_skipped():
    r = distortion_identity_surface_check(surface_from_polys(X, X, X * X - Y * Y), [(0, 0)])
    assert r.summary["skipped"] == 1


def test_n_identity_and_curvature_small():
    assert n_identity_suite(15, seed=4).ok
    r = curvature_sign_suite(surfaces=4, pts=5, seed=4)
    assert r.ok and r.summary["points"] == 20


def test_numeric_suite_small(saddle):
    grid = UNIT_SQUARE.grid(3, 3)
    r = fd_bridge_suite(saddle, grid)
    assert r.ok and r.extra["max_rel_deviation"] <= 1e-6
    assert 3 <= fd_convergence_ratio(saddle, grid) <= 5


def test_numeric_suite_coarse_step_fails(saddle):
    r = fd_bridge_suite(saddle, UNIT_SQUARE.grid(3, 3), 1e-2, 1e-12)
    assert not r.ok


def test_dilatation_bridge_small(saddle):
    r = dilatation_bridge_check(saddle, [(1, 0), (Fraction(1, 2), Fraction(-1, 3))])
    assert r.ok and r.summary["passed"] == 2


def test_branch_line_report_shape():
    r = branch_line_counterexample()
    assert r.extra["m_factored"] == "16*(y+1/2)^4"
    names = {rec.get("check") for rec in r.records}
    assert {"m_symbolic", "m_zero_on_line", "m_positive_off_line"} <= names


def test_planar_family_suite_small():
    r = planar_family_suite(count_nonplanar=5, spec=RandomSurfaceSpec(4, 10, 7, True))
    assert r.ok and r.summary["points"] == 30


def test_classifier_examples_for_random_surface():
    s = random_surface(RandomSurfaceSpec(4, 10, 11, True))
    assert isinstance(planarity_classify(s), NonPlanar)
    assert isinstance(planarity_classify(surface_from_polys(X, 2 * X + Y, Poly2.const(3))), Planar)
