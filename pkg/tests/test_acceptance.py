"""End-to-end acceptance criteria, each at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -v``; the terminal summary lists one
PASS/FAIL line per criterion.
"""
import os
import subprocess
import sys
import time
from fractions import Fraction

import mpmath

from harmgauss.gauss import NonPlanar, Planar, gauss_derivatives, gauss_distortion_sq, m_polynomial, planarity_classify
from harmgauss.harmonic import Poly2
from harmgauss.numeric import MPSurface, fd_beltrami
from harmgauss.surface import cross, distortion_sq, is_isothermal, is_zero_vec, surface_from_polys, tangents
from harmgauss.verify import (
    RandomSurfaceSpec, curvature_sign_suite, default_c_choices, default_family_params,
    fd_convergence_ratio, n_identity_suite, planar_family_surface, random_surface,
    branch_line_surface, distortion_identity_suite, fd_bridge_suite, case_seeds,
)
from harmgauss.weierstrass import enneper, null_check, phi_from_pq, weierstrass_surface

X, Y = Poly2.x(), Poly2.y()


def _saddle():
    return surface_from_polys(X, Y, X * Y)


def test_criterion_1_exact_distortion_identity(criterion):
    start = time.perf_counter()
    r = distortion_identity_suite(100, RandomSurfaceSpec(degree=4, height=10, seed=1), 5)
    elapsed = time.perf_counter() - start
    s = r.summary
    ok = s["failures"] == 0 and s["passed"] > 0 and elapsed <= 60
    criterion(1, ok, f"{s['passed']} exact equalities, {s['failures']} failures, "
                     f"{s['skipped']} skipped, {elapsed:.1f}s")


def test_criterion_2_n_identity(criterion):
    r = n_identity_suite(100, degree=6, height=10, seed=1)
    s = r.summary
    criterion(2, s["passed"] == 100 and s["failures"] == 0,
              f"n_explicit = gamma*M on {s['passed']}/100 random jets (printed and reduced M agree)")


def test_criterion_3_numeric_bridge(criterion):
    s = _saddle()
    grid = s.domain.grid(9, 9)
    r = fd_bridge_suite(s, grid, fd_step=1e-5, tol=1e-6)
    worst = r.extra["max_rel_deviation"]
    ratio = fd_convergence_ratio(s, grid, 1e-5)
    ok = worst <= 1e-6 and r.ok and 3 <= ratio <= 5
    criterion(3, ok, f"max rel deviation {worst:.3e} (<= 1e-6), halving ratio {ratio:.4f} (in [3, 5])")


def test_criterion_4_branch_line_counterexample(criterion):
    s, _ = branch_line_surface()
    m = m_polynomial(s)
    symbolic = m == 16 * (Y + Fraction(1, 2)) ** 4
    line = [(Fraction(2 * k - 9, 10), Fraction(-1, 2)) for k in range(10)]
    off = [(Fraction(2 * k - 9, 10), Fraction(-1, 2) + Fraction(k + 1, 12)) for k in range(10)]
    m_zero = all(m(*p) == 0 for p in line)
    regular = [tangents(s, p).g_sq > 0 for p in line]
    m_pos = all(m(*p) > 0 for p in off)
    ok = symbolic and m_zero and all(regular) and m_pos
    criterion(4, ok, f"M = {m} (16(y+1/2)^4: {symbolic}); M = 0 on line: {m_zero}; "
                     f"g_sq > 0 on line at {sum(regular)}/10 points; M > 0 off line: {m_pos}")


def test_criterion_5_planar_families(criterion):
    planar_ok = 0
    for lam0, nu0, nu1 in default_family_params():
        for c in default_c_choices():
            r = planarity_classify(planar_family_surface(lam0, nu0, nu1, c))
            if isinstance(r, Planar) and is_zero_vec(cross(r.direction, (nu1, -1, lam0))):
                planar_ok += 1
    nonplanar_ok = 0
    for sub in case_seeds(7, 50):
        s = random_surface(RandomSurfaceSpec(4, 10, sub, True))
        r = planarity_classify(s)
        if isinstance(r, NonPlanar) and m_polynomial(s)(*r.witness) != 0:
            nonplanar_ok += 1
    criterion(5, planar_ok == 25 and nonplanar_ok == 50,
              f"{planar_ok}/25 family instances Planar with normal || (nu1, -1, lam0); "
              f"{nonplanar_ok}/50 random surfaces NonPlanar with witness M != 0")


def test_criterion_6_enneper(criterion):
    data = enneper()
    null = null_check(phi_from_pq(data))
    s = weierstrass_surface(data)
    grid = s.domain.grid(5, 5)
    iso = all(is_isothermal(s, p) for p in grid)
    regular = [p for p in grid if tangents(s, p).g_sq]
    dist = all(distortion_sq(s, p) == 1 for p in regular)
    gauss_pts = [p for p in regular if not gauss_derivatives(s, p).degenerate]
    gauss = all(gauss_distortion_sq(s, p) == 1 for p in gauss_pts)
    ok = null and iso and dist and gauss and len(regular) == 25
    criterion(6, ok, f"null: {null}; isothermal on 25/25: {iso}; D^2 = 1 on {len(regular)} regular points: {dist}; "
                     f"Gauss D^2 = 1 on {len(gauss_pts)} Gauss-regular points: {gauss}")


def test_criterion_7_dilatation_bridge(criterion):
    s = _saddle()
    with mpmath.workdps(40):
        zbar, z = fd_beltrami(MPSurface(s), Fraction(1), Fraction(0), 1e-5)
        mu = float(min(zbar / z, z / zbar))
    expected = (2 ** 0.5 - 1) / (2 ** 0.5 + 1)
    from harmgauss.surface import dilatation_from_distortion

    d = dilatation_from_distortion(Fraction(9, 8))
    ok = abs(mu - d) <= 1e-6 and abs(d - expected) <= 1e-12
    criterion(7, ok, f"finite-difference Beltrami modulus {mu:.10f} vs dilatation {d:.10f}")


def test_criterion_8_curvature_sign(criterion):
    r = curvature_sign_suite(surfaces=20, pts=25, degree=4, height=10, seed=1, normalized=False)
    s = r.summary
    criterion(8, s["points"] == 500 and s["failures"] == 0,
              f"curvature_sign <= 0 at {s['passed']} regular points, {s['skipped']} skipped, "
              f"{s['failures']} failures over {s['cases']} surfaces")


def test_criterion_9_determinism(criterion, tmp_path):
    suites = [
        ["thm1-exact", "--count", "10", "--pts", "3"],
        ["thm1-numeric", "--grid", "3x3"],
        ["dilatation", "--grid", "3x3"],
        ["remark14"],
        ["thm3", "--count", "5"],
        ["n-identity", "--count", "10"],
        ["curvature", "--count", "3", "--pts", "4"],
    ]
    identical = 0
    for args in suites:
        outs = []
        for run, threads in enumerate(("1", "4")):
            path = tmp_path / f"{args[0]}-{run}.json"
            subprocess.run([sys.executable, "-m", "harmgauss", "verify", *args, "--seed", "5", "--out", str(path)],
                           env={**os.environ, "HG_THREADS": threads}, capture_output=True)
            outs.append(path.read_bytes())
        identical += outs[0] == outs[1] and len(outs[0]) > 0
    criterion(9, identical == len(suites),
              f"{identical}/{len(suites)} suites byte-identical across repeated runs (1 vs 4 workers)")
