"""Enneper-Weierstrass minimal surfaces from polynomial data (p, q).

phi = (p(1 - q^2), i p(1 + q^2), 2 p q) and x_k = Re of the antiderivative of
phi_k with zero constant at the origin. Only polynomial q is supported.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Optional

from .errors import BranchPoint, NorthPole, NullViolation
from .gauss import complex_gauss
from .harmonic import AnalyticPolynomial, HarmonicFunction
from .rational import CQ, I, Q
from .surface import (
    UNIT_SQUARE, Domain, HarmonicSurface, distortion_sq, dot, norm_sq, tangents,
)

MATCH_TOL = 1e-9


@dataclass(frozen=True)
class WeierstrassData:
    p: AnalyticPolynomial
    q: AnalyticPolynomial

    def __post_init__(self):
        if self.p.is_zero():
            raise ValueError("p must not be identically zero")


@dataclass(frozen=True)
class PhiTriple:
    phi1: AnalyticPolynomial
    phi2: AnalyticPolynomial
    phi3: AnalyticPolynomial

    def __iter__(self):
        return iter((self.phi1, self.phi2, self.phi3))


def enneper() -> WeierstrassData:
    return WeierstrassData(AnalyticPolynomial.const(1), AnalyticPolynomial.monomial(1))


def phi_from_pq(d: WeierstrassData) -> PhiTriple:
    p, q = d.p, d.q
    q2 = q * q
    return PhiTriple(p * (1 - q2), p * I * (1 + q2), p * q * 2)


def null_residual(t: PhiTriple) -> AnalyticPolynomial:
    return t.phi1 * t.phi1 + t.phi2 * t.phi2 + t.phi3 * t.phi3


def null_check(t: PhiTriple) -> bool:
    return null_residual(t).is_zero()


def integrate(t: PhiTriple, domain: Domain = UNIT_SQUARE) -> HarmonicSurface:
    residual = null_residual(t)
    if not residual.is_zero():
        raise NullViolation(residual)
    a, b, c = (HarmonicFunction(phi.antiderivative()) for phi in t)
    return HarmonicSurface(a, b, c, domain)


def weierstrass_surface(d: WeierstrassData, domain: Domain = UNIT_SQUARE) -> HarmonicSurface:
    return integrate(phi_from_pq(d), domain)


@dataclass
class MinimalPointRecord:
    point: tuple
    regular: bool
    isothermal: Optional[bool] = None
    distortion_sq: Optional[object] = None
    v_z_negative: Optional[bool] = None
    passed: bool = True


@dataclass
class MinimalReport:
    records: List[MinimalPointRecord] = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(not r.passed for r in self.records)

    @property
    def skipped(self) -> int:
        return sum(not r.regular for r in self.records)

    @property
    def all_passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        from .report import jsonable

        return {
            "records": [jsonable(vars(r)) for r in self.records],
            "summary": {"points": len(self.records), "failures": self.failures, "skipped": self.skipped},
        }


def verify_minimal(s: HarmonicSurface, pts: Iterable) -> MinimalReport:
    """Exact isothermality and unit distortion at each regular sample point.

    ``v_z_negative`` flags points where Y_x x Y_y points into the lower half-space;
    it is informational and never fails a point.
    """
    report = MinimalReport()
    for pt in pts:
        x, y = s.check_point(pt)
        t = tangents(s, (x, y))
        if not t.g_sq:
            report.records.append(MinimalPointRecord((x, y), regular=False))
            continue
        iso = norm_sq(t.y_x) == norm_sq(t.y_y) and dot(t.y_x, t.y_y) == 0
        dsq = distortion_sq(s, (x, y))
        report.records.append(MinimalPointRecord(
            (x, y), True, iso, dsq, t.v[2] < 0, passed=iso and dsq == 1,
        ))
    return report


def _eval_complex(poly: AnalyticPolynomial, z: complex) -> complex:
    acc = 0j
    for c in reversed(poly.coeffs):
        acc = acc * z + complex(c)
    return acc


def gauss_vs_q(d: WeierstrassData, pts: Iterable, domain: Domain = UNIT_SQUARE) -> list:
    """Compare the complex Gauss map of the generated surface with candidate formulas.

    Candidates: q, its conjugate, 1/conj(q) and -i/q'. Nothing is asserted; each
    row lists absolute deviations and which candidates agree within MATCH_TOL.
    """
    s = weierstrass_surface(d, domain)
    dq = d.q.derivative()
    rows = []
    for pt in pts:
        x, y = Q(pt[0]), Q(pt[1])
        zeta = complex(float(x), float(y))
        row = {"point": (x, y), "gauss": None, "candidates": {}, "deviation": {}, "matches": []}
        q_val = _eval_complex(d.q, zeta)
        cands = {"q": q_val, "conj_q": q_val.conjugate()}
        cands["inv_conj_q"] = 1 / q_val.conjugate() if q_val != 0 else None
        dq_val = complex(dq(CQ(x, y)))
        cands["neg_i_over_dq"] = -1j / dq_val if dq_val != 0 else None
        row["candidates"] = cands
        try:
            g = complex_gauss(s, (x, y))
        except (BranchPoint, NorthPole) as exc:
            row["error"] = type(exc).__name__
            rows.append(row)
            continue
        row["gauss"] = g
        for name, val in cands.items():
            if val is None:
                row["deviation"][name] = None
                continue
            dev = abs(g - val)
            row["deviation"][name] = dev
            if dev <= MATCH_TOL * max(1.0, abs(val)):
                row["matches"].append(name)
        rows.append(row)
    return rows
