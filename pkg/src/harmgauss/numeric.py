"""Floating-point oracles: the Gauss map evaluated in mpmath and differentiated
by central differences.

The working precision (FD_DPS digits) is far above double so that the
truncation error of the difference quotient, not cancellation, dominates. That
keeps the O(h^2) convergence of the oracle observable down to small steps.
"""
from __future__ import annotations

from typing import Tuple

import mpmath

from .harmonic import AnalyticPolynomial
from .surface import HarmonicSurface

FD_DPS = 40


def _mpc_coeffs(F: AnalyticPolynomial):
    return [mpmath.mpc(mpmath.mpf(c.re.numerator) / c.re.denominator,
                       mpmath.mpf(c.im.numerator) / c.im.denominator) for c in F.coeffs]


def _horner(coeffs, z):
    acc = mpmath.mpc(0)
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


class MPSurface:
    """mpmath evaluator for Y_x, Y_y, the unit normal and the complex Gauss map."""

    def __init__(self, s: HarmonicSurface):
        # h_x = Re F', h_y = -Im F'
        self._dF = [_mpc_coeffs(h.analytic.derivative()) for h in s.coords]

    def tangents(self, x, y):
        z = mpmath.mpc(x, y)
        vals = [_horner(c, z) for c in self._dF]
        return [v.real for v in vals], [-v.imag for v in vals]

    def normal(self, x, y):
        u, w = self.tangents(x, y)
        v = [u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]]
        length = mpmath.sqrt(v[0] ** 2 + v[1] ** 2 + v[2] ** 2)
        return [c / length for c in v]

    def gauss(self, x, y):
        n = self.normal(x, y)
        return mpmath.mpc(n[0], n[1]) / (1 - n[2])


def _pt(x, y):
    return mpmath.mpf(x.numerator) / x.denominator, mpmath.mpf(y.numerator) / y.denominator


def fd_normal_derivatives(ev: MPSurface, x, y, h: float):
    """Central differences P ~ n_x, Q ~ n_y at the rational point (x, y)."""
    with mpmath.workdps(FD_DPS):
        X, Y = _pt(x, y)
        h = mpmath.mpf(h)
        npx, nmx = ev.normal(X + h, Y), ev.normal(X - h, Y)
        npy, nmy = ev.normal(X, Y + h), ev.normal(X, Y - h)
        P = [(a - b) / (2 * h) for a, b in zip(npx, nmx)]
        Qv = [(a - b) / (2 * h) for a, b in zip(npy, nmy)]
        return P, Qv


def fd_pq_quantities(ev: MPSurface, x, y, h: float) -> Tuple[object, object]:
    """(|P|^2 + |Q|^2, |P x Q|) from finite differences, as mpf."""
    with mpmath.workdps(FD_DPS):
        P, Qv = fd_normal_derivatives(ev, x, y, h)
        c = [P[1] * Qv[2] - P[2] * Qv[1], P[2] * Qv[0] - P[0] * Qv[2], P[0] * Qv[1] - P[1] * Qv[0]]
        sum_sq = sum(p * p for p in P) + sum(q * q for q in Qv)
        return sum_sq, mpmath.sqrt(sum(t * t for t in c))


def fd_beltrami(ev: MPSurface, x, y, h: float):
    """Return (|g_zbar|, |g_z|) for the complex Gauss map by central differences."""
    with mpmath.workdps(FD_DPS):
        X, Y = _pt(x, y)
        h = mpmath.mpf(h)
        gx = (ev.gauss(X + h, Y) - ev.gauss(X - h, Y)) / (2 * h)
        gy = (ev.gauss(X, Y + h) - ev.gauss(X, Y - h)) / (2 * h)
        g_z = (gx - 1j * gy) / 2
        g_zbar = (gx + 1j * gy) / 2
        return abs(g_zbar), abs(g_z)


def mp_sqrt_rational(q) -> object:
    with mpmath.workdps(FD_DPS):
        return mpmath.sqrt(mpmath.mpf(q.numerator) / q.denominator)


def mp_rational(q):
    with mpmath.workdps(FD_DPS):
        return mpmath.mpf(q.numerator) / q.denominator
