"""Verification suites with exact and numeric oracles.

Every suite returns a :class:`VerificationReport`. Reports depend only on their
arguments (seeds included), so rerunning a suite reproduces its JSON byte for byte.
"""
from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, replace
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import mpmath

from . import numeric
from .errors import BranchPoint
from .gauss import (
    NonPlanar, Planar, curvature_sign, gauss_derivatives, jet, m_polynomial, m_reduced,
    m_witness, mn_quantities, n_explicit, planarity_classify,
)
from .harmonic import AnalyticPolynomial, HarmonicFunction, Poly2, harmonic_residual, to_analytic
from .rational import CQ, Q
from .report import VerificationReport
from .surface import (
    UNIT_SQUARE, Domain, HarmonicSurface, cross, dilatation_from_distortion,
    is_zero_vec, norm_sq, surface_from_polys, tangents,
)

POINT_DENOMINATOR_MAX = 1000
DEFAULT_FD_STEP = 1e-5
DEFAULT_TOL = 1e-6


@dataclass(frozen=True)
class RandomSurfaceSpec:
    degree: int = 4
    height: int = 10
    seed: int = 0
    normalized: bool = True

    def __post_init__(self):
        if self.degree < 1 or self.height < 1:
            raise ValueError("degree and height must be >= 1")


def _random_rational(rng: random.Random, height: int) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def random_harmonic(rng: random.Random, degree: int, height: int) -> HarmonicFunction:
    coeffs = [CQ(_random_rational(rng, height), _random_rational(rng, height))
              for _ in range(degree + 1)]
    if not any(coeffs[1:]):
        coeffs[1] = CQ(1)
    return HarmonicFunction(AnalyticPolynomial(coeffs))


def random_surface(spec: RandomSurfaceSpec, domain: Domain = UNIT_SQUARE) -> HarmonicSurface:
    rng = random.Random(spec.seed)
    b = random_harmonic(rng, spec.degree, spec.height)
    c = random_harmonic(rng, spec.degree, spec.height)
    if spec.normalized:
        a = HarmonicFunction.coordinate_x()
    else:
        a = random_harmonic(rng, spec.degree, spec.height)
    return HarmonicSurface(a, b, c, domain)


def random_point(rng: random.Random, domain: Domain) -> Tuple[Fraction, Fraction]:
    def coord(lo, hi):
        den = rng.randint(1, POINT_DENOMINATOR_MAX)
        return lo + (hi - lo) * Fraction(rng.randint(0, den), den)

    return coord(domain.x_lo, domain.x_hi), coord(domain.y_lo, domain.y_hi)


def case_seeds(seed: int, count: int) -> List[int]:
    master = random.Random(seed)
    return [master.getrandbits(64) for _ in range(count)]


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("HG_THREADS", "1")))
    except ValueError:
        return 1


def _ordered_map(fn, items: Sequence):
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(it) for it in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------- exact distortion identity

def _identity_case(args):
    spec, pts_per_surface = args
    s = random_surface(spec)
    rng = random.Random(spec.seed ^ 0x5EED)
    out = []
    for _ in range(pts_per_surface):
        pt = random_point(rng, s.domain)
        out.append((pt, check_distortion_identity_point(s, pt)))
    return spec, out


def check_distortion_identity_point(s: HarmonicSurface, pt) -> Tuple[str, dict]:
    """Cross-check both distortion routes at one point; returns (status, quantities)."""
    t = tangents(s, pt)
    if not t.g_sq:
        return "skip", {"reason": "branch point"}
    gd = gauss_derivatives(s, pt)
    if gd.degenerate:
        return "skip", {"reason": "Gauss-degenerate"}
    d_surface = t.energy ** 2 / (4 * t.g_sq)
    d_gauss = gd.sum_sq_num ** 2 * gd.g ** 2 / (4 * norm_sq(gd.cross_num))
    q = {"dist_sq_surface": d_surface, "dist_sq_gauss": d_gauss}
    checks = {"distortion_equal": d_surface == d_gauss}
    if s.is_normalized():
        j = jet(s, pt)
        mn = mn_quantities(j)
        n_val = n_explicit(j)
        q.update(m=mn.m, n=n_val, gamma=mn.gamma, g_sq=mn.g_sq)
        checks["n_equals_gamma_m"] = n_val == mn.gamma * mn.m
        checks["m_forms_agree"] = mn.m == m_reduced(j)
        checks["pq_sum_times_g4_equals_n"] = gd.sum_sq_num == n_val
        checks["cross_sq_times_g6_equals_m_sq"] = norm_sq(gd.cross_num) == mn.m ** 2 * gd.g ** 3
    q["checks"] = checks
    return ("pass" if all(checks.values()) else "fail"), q


def distortion_identity_suite(count: int, spec: RandomSurfaceSpec, pts_per_surface: int) -> VerificationReport:
    report = VerificationReport("thm1-exact", {**asdict(spec), "count": count, "pts": pts_per_surface})
    jobs = [(replace(spec, seed=sd), pts_per_surface) for sd in case_seeds(spec.seed, count)]
    for case, (sub, results) in enumerate(_ordered_map(_identity_case, jobs)):
        report.cases.append({"seed": sub.seed, "degree": sub.degree, "normalized": sub.normalized})
        for pt, (status, q) in results:
            report.add(case, pt, status, **q)
    return report


def distortion_identity_surface_check(s: HarmonicSurface, pts: Iterable, label: str = "surface") -> VerificationReport:
    report = VerificationReport("thm1-exact", {"surface": label})
    report.cases.append({"surface": label})
    for pt in pts:
        status, q = check_distortion_identity_point(s, s.check_point(pt))
        report.add(0, pt, status, **q)
    return report


def n_identity_suite(count: int, degree: int = 6, height: int = 10, seed: int = 0) -> VerificationReport:
    """n_explicit == gamma * M and printed M == reduced M on random harmonic jets."""
    report = VerificationReport("n-identity", {"count": count, "degree": degree, "height": height, "seed": seed})
    for case, sd in enumerate(case_seeds(seed, count)):
        s = random_surface(RandomSurfaceSpec(degree, height, sd, True))
        pt = random_point(random.Random(sd ^ 0x5EED), s.domain)
        j = jet(s, pt)
        mn = mn_quantities(j)
        n_val = n_explicit(j)
        ok = j.is_harmonic() and n_val == mn.gamma * mn.m and mn.m == m_reduced(j)
        report.cases.append({"seed": sd})
        report.add(case, pt, "pass" if ok else "fail", n=n_val, gamma=mn.gamma, m=mn.m)
    return report


def curvature_sign_suite(surfaces: int = 20, pts: int = 25, degree: int = 4, height: int = 10,
                         seed: int = 0, normalized: bool = False) -> VerificationReport:
    report = VerificationReport("curvature", {"surfaces": surfaces, "pts": pts, "degree": degree,
                                              "height": height, "seed": seed, "normalized": normalized})
    for case, sd in enumerate(case_seeds(seed, surfaces)):
        s = random_surface(RandomSurfaceSpec(degree, height, sd, normalized))
        rng = random.Random(sd ^ 0x5EED)
        report.cases.append({"seed": sd})
        for _ in range(pts):
            pt = random_point(rng, s.domain)
            try:
                k = curvature_sign(s, pt)
            except BranchPoint:
                report.add(case, pt, "skip", reason="branch point")
                continue
            report.add(case, pt, "pass" if k <= 0 else "fail", curvature_sign=k)
    return report


# ---------------------------------------------------------------- numeric oracles

def _rel(a, b):
    a, b = mpmath.mpf(a), mpmath.mpf(b)
    return abs(a - b) / abs(b) if b else abs(a - b)


def _numeric_point(s, ev, pt, fd_step):
    t = tangents(s, pt)
    if not t.g_sq:
        return None, {"reason": "branch point"}
    with mpmath.workdps(numeric.FD_DPS):
        sum_sq, cross_abs = numeric.fd_pq_quantities(ev, pt[0], pt[1], fd_step)
        d_surface = numeric.mp_sqrt_rational(t.energy ** 2 / (4 * t.g_sq))
        devs = {}
        if s.is_normalized():
            j = jet(s, pt)
            mn = mn_quantities(j)
            if mn.m == 0:
                return None, {"reason": "Gauss-degenerate"}
            n_val = n_explicit(j)
            g = numeric.mp_sqrt_rational(mn.g_sq)
            devs["pq_sum_sq"] = _rel(sum_sq, numeric.mp_rational(n_val / mn.g_sq ** 2))
            devs["pq_cross"] = _rel(cross_abs, abs(numeric.mp_rational(mn.m)) / g ** 3)
        elif gauss_derivatives(s, pt).degenerate:
            return None, {"reason": "Gauss-degenerate"}
        devs["distortion"] = _rel(sum_sq / (2 * cross_abs), d_surface)
        return max(devs.values()), {k: float(v) for k, v in devs.items()}


def fd_bridge_suite(s: HarmonicSurface, grid: Iterable, fd_step: float = DEFAULT_FD_STEP,
                           tol: float = DEFAULT_TOL) -> VerificationReport:
    """Finite-difference P, Q of the normal against the exact N/G^4, M/G^3 and D_X."""
    report = VerificationReport("thm1-numeric", {"fd_step": fd_step, "tol": tol})
    report.cases.append({"normalized": s.is_normalized()})
    ev = numeric.MPSurface(s)
    worst = 0.0
    for pt in grid:
        pt = s.check_point(pt)
        dev, info = _numeric_point(s, ev, pt, fd_step)
        if dev is None:
            report.add(0, pt, "skip", **info)
            continue
        worst = max(worst, float(dev))
        report.add(0, pt, "pass" if dev <= tol else "fail", deviation=info)
    report.extra["max_rel_deviation"] = worst
    return report


def fd_convergence_ratio(s: HarmonicSurface, grid: Sequence, fd_step: float = DEFAULT_FD_STEP) -> float:
    """max deviation at fd_step divided by max deviation at fd_step/2 (about 4 for central differences)."""
    big = fd_bridge_suite(s, grid, fd_step, tol=1.0).extra["max_rel_deviation"]
    small = fd_bridge_suite(s, grid, fd_step / 2, tol=1.0).extra["max_rel_deviation"]
    return big / small


def dilatation_bridge_check(s: HarmonicSurface, pts: Iterable, fd_step: float = DEFAULT_FD_STEP,
                            tol: float = DEFAULT_TOL) -> VerificationReport:
    """Beltrami modulus of the complex Gauss map (finite differences) vs the surface dilatation.

    The Gauss map of a negatively curved surface reverses orientation, so the
    modulus is taken as min(|g_zbar/g_z|, |g_z/g_zbar|), the dilatation of g or
    of its conjugate; the record keeps which one applied.
    """
    report = VerificationReport("dilatation", {"fd_step": fd_step, "tol": tol})
    report.cases.append({"normalized": s.is_normalized()})
    ev = numeric.MPSurface(s)
    pole_margin = 1e-6
    for pt in pts:
        pt = s.check_point(pt)
        t = tangents(s, pt)
        if not t.g_sq:
            report.add(0, pt, "skip", reason="branch point")
            continue
        if gauss_derivatives(s, pt).degenerate:
            report.add(0, pt, "skip", reason="Gauss-degenerate")
            continue
        with mpmath.workdps(numeric.FD_DPS):
            n3 = ev.normal(*numeric._pt(*pt))[2]
            if 1 - n3 < pole_margin:
                report.add(0, pt, "skip", reason="north pole")
                continue
            zbar, z = numeric.fd_beltrami(ev, pt[0], pt[1], fd_step)
            reversing = zbar > z
            mu = float(z / zbar if reversing else zbar / z)
        expected = dilatation_from_distortion(t.energy ** 2 / (4 * t.g_sq))
        dev = abs(mu - expected)
        report.add(0, pt, "pass" if dev <= tol else "fail", beltrami_modulus=mu,
                   expected=expected, deviation=dev, orientation_reversing=bool(reversing))
    return report


# ---------------------------------------------------------------- branch-line counterexample

def branch_line_surface() -> Tuple[HarmonicSurface, Tuple[Poly2, Poly2, Poly2]]:
    x, y = Poly2.x(), Poly2.y()
    half = Fraction(1, 2)
    polys = (x, -Fraction(1, 3) * x ** 3 + x * (half + y) ** 2, 1 - x ** 2 + y + y ** 2)
    return surface_from_polys(*polys), polys


def branch_line_counterexample() -> VerificationReport:
    """Checks the counterexample surface; every claim is a separate record.

    Record kinds: harmonicity of each coordinate, the symbolic M, M = 0 with the
    surface regular on the line y = -1/2, and M > 0 off that line.
    """
    s, polys = branch_line_surface()
    report = VerificationReport("remark14", {})
    report.cases.append({"surface": [str(p) for p in polys]})
    for name, p in zip("abc", polys):
        res = harmonic_residual(p)
        report.add(0, None, "pass" if res.is_zero() else "fail", check=f"harmonic_{name}", residual=str(res))
    m_poly = m_polynomial(s)
    expected = 16 * (Poly2.y() + Fraction(1, 2)) ** 4
    report.extra["m_symbolic"] = str(m_poly)
    report.extra["m_factored"] = "16*(y+1/2)^4" if m_poly == expected else None
    report.add(0, None, "pass" if m_poly == expected else "fail", check="m_symbolic", m=str(m_poly))

    line = [(Fraction(2 * k - 9, 10), Fraction(-1, 2)) for k in range(10)]
    for pt in line:
        m_val = m_poly(*pt)
        g_sq = tangents(s, pt).g_sq
        report.add(0, pt, "pass" if m_val == 0 else "fail", check="m_zero_on_line", m=m_val)
        report.add(0, pt, "pass" if g_sq > 0 else "fail", check="regular_on_line", g_sq=g_sq)
    off = [(Fraction(2 * k - 9, 10), Fraction(-1, 2) + Fraction(k + 1, 12)) for k in range(10)]
    for pt in off:
        m_val = m_poly(*pt)
        report.add(0, pt, "pass" if m_val > 0 else "fail", check="m_positive_off_line", m=m_val)
    return report


# ---------------------------------------------------------------- planar families

def default_family_params() -> List[Tuple[Fraction, Fraction, Fraction]]:
    return [tuple(Fraction(v) for v in t) for t in
            [(1, 0, 1), (0, 5, 0), (1, 0, 2), (Fraction(-3, 2), Fraction(1, 3), Fraction(2, 7)), (2, -1, -3)]]


def default_c_choices() -> List[HarmonicFunction]:
    x, y = Poly2.x(), Poly2.y()
    polys = [x ** 2 - y ** 2, x ** 3 - 3 * x * y ** 2, y, 2 * x * y + 3 * y,
             x ** 4 - 6 * x ** 2 * y ** 2 + y ** 4 - Fraction(1, 2) * y]
    return [to_analytic(p) for p in polys]


def planar_family_surface(lam0, nu0, nu1, c: HarmonicFunction, domain: Domain = UNIT_SQUARE) -> HarmonicSurface:
    x = HarmonicFunction.coordinate_x()
    b = Q(lam0) * c + Q(nu0) + Q(nu1) * x
    return HarmonicSurface(x, b, c, domain)


def planar_family_suite(params: Optional[Sequence] = None, c_choices: Optional[Sequence] = None,
                          count_nonplanar: int = 50, spec: RandomSurfaceSpec = RandomSurfaceSpec(4, 10, 7, True)
                          ) -> VerificationReport:
    params = default_family_params() if params is None else [tuple(Q(v) for v in t) for t in params]
    c_choices = default_c_choices() if c_choices is None else list(c_choices)
    report = VerificationReport("thm3", {"params": params, "c_choices": [str(c.bivariate) for c in c_choices],
                                         "count_nonplanar": count_nonplanar, **asdict(spec)})
    for lam0, nu0, nu1 in params:
        for c in c_choices:
            case = len(report.cases)
            report.cases.append({"family": [lam0, nu0, nu1], "c": str(c.bivariate)})
            s = planar_family_surface(lam0, nu0, nu1, c)
            result = planarity_classify(s)
            expected_dir = (nu1, Fraction(-1), lam0)
            planar = isinstance(result, Planar)
            parallel = planar and is_zero_vec(cross(result.direction, expected_dir))
            m_zero = m_polynomial(s).is_zero()
            report.add(case, result.reference, "pass" if planar and parallel and m_zero else "fail",
                       classification="Planar" if planar else "NonPlanar",
                       direction=result.direction if planar else None,
                       normal=list(result.normal) if planar else None,
                       m_identically_zero=m_zero)
    for sd in case_seeds(spec.seed, count_nonplanar):
        case = len(report.cases)
        sub = replace(spec, seed=sd, normalized=True)
        report.cases.append({"random_seed": sd, "degree": sub.degree})
        s = random_surface(sub)
        result = planarity_classify(s)
        witness = m_witness(s)
        ok = isinstance(result, NonPlanar) and witness is not None
        report.add(case, witness, "pass" if ok else "fail",
                   classification="NonPlanar" if isinstance(result, NonPlanar) else "Planar",
                   m_at_witness=m_polynomial(s)(*witness) if witness else None)
    return report
