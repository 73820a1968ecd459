"""Exact Gauss-map and distortion geometry for harmonic polynomial surfaces."""
from .errors import (
    BranchPoint, DegenerateSurface, GaussDegenerate, HarmGaussError, InvalidDistortion,
    NorthPole, NotHarmonic, NotNormalized, NullViolation, OutOfDomain,
)
from .gauss import (
    GaussJet, MNQuantities, NonPlanar, Planar, complex_gauss, curvature_sign, gauss_distortion_sq,
    gauss_regular, jet, mn_quantities, n_explicit, normal, planarity_classify, stereographic,
)
from .harmonic import (
    AnalyticPolynomial, BivariatePolynomial, HarmonicFunction, Poly2, conjugate, harmonic_residual,
    partial_x, partial_y, to_analytic,
)
from .rational import CQ
from .surface import (
    Domain, HarmonicSurface, TangentData, dilatation_from_distortion, distortion_general,
    distortion_sq, is_branch_point, is_isothermal, is_K_quasiconformal, surface_from_polys, tangents,
)
from .weierstrass import (
    PhiTriple, WeierstrassData, enneper, gauss_vs_q, integrate, null_check, phi_from_pq,
    verify_minimal, weierstrass_surface,
)

__version__ = "0.1.0"
