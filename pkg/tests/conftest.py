from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import strategies as st

from harmgauss.harmonic import AnalyticPolynomial, HarmonicFunction, Poly2
from harmgauss.rational import CQ
from harmgauss.surface import HarmonicSurface, surface_from_polys

X, Y = Poly2.x(), Poly2.y()
SX, SY = sp.symbols("x y", real=True)


def rationals(height=20):
    return st.builds(Fraction, st.integers(-height, height), st.integers(1, height))


def unit_rationals():
    """Rationals in [-1, 1] with denominators up to 1000."""
    return st.integers(1, 1000).flatmap(
        lambda d: st.builds(lambda n: Fraction(n, d), st.integers(-d, d)))


def complex_rationals(height=10):
    return st.builds(CQ, rationals(height), rationals(height))


def harmonic_functions(max_degree=5, height=10):
    return st.lists(complex_rationals(height), min_size=1, max_size=max_degree + 1).map(
        lambda cs: HarmonicFunction(AnalyticPolynomial(cs)))


def harmonic_surfaces(max_degree=4, normalized=False):
    a = st.just(HarmonicFunction.coordinate_x()) if normalized else harmonic_functions(max_degree)
    return st.builds(HarmonicSurface, a, harmonic_functions(max_degree), harmonic_functions(max_degree))


def to_sympy(p: Poly2):
    return sum((sp.Rational(c.numerator, c.denominator) * SX ** i * SY ** j
                for (i, j), c in p.terms.items()), sp.Integer(0))


def from_sympy(expr) -> Poly2:
    poly = sp.Poly(sp.expand(expr), SX, SY)
    return Poly2({m: Fraction(int(c.p), int(c.q)) for m, c in zip(poly.monoms(), poly.coeffs())})


@pytest.fixture
def saddle():
    """S = (x, y, xy) on [-1, 1]^2."""
    return surface_from_polys(X, Y, X * Y)


@pytest.fixture
def plane():
    return surface_from_polys(X, Y, Poly2())


@pytest.fixture
def remark_surface():
    from harmgauss.verify import branch_line_surface

    return branch_line_surface()[0]


_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record a one-line PASS/FAIL verdict for the acceptance summary, then assert it."""
    lines = request.config.stash.setdefault(_ACCEPTANCE, [])

    def record(number: int, ok: bool, detail: str):
        lines.append(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda l: int(l.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
