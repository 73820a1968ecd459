class HarmGaussError(Exception):
    """Base class for all library errors."""


class NotHarmonic(HarmGaussError):
    def __init__(self, residual, label: str = ""):
        self.residual = residual
        where = f" ({label})" if label else ""
        super().__init__(f"polynomial is not harmonic{where}; Laplacian = {residual}")


class OutOfDomain(HarmGaussError):
    def __init__(self, point):
        self.point = point
        super().__init__(f"point {tuple(str(c) for c in point)} lies outside the surface domain")


class BranchPoint(HarmGaussError):
    """Y_x and Y_y are linearly dependent at the point."""

    def __init__(self, point):
        self.point = point
        super().__init__(f"branch point at {tuple(str(c) for c in point)}: Y_x x Y_y = 0")


class GaussDegenerate(HarmGaussError):
    """The Gauss map is singular: n_x x n_y = 0, while the surface itself is regular."""

    def __init__(self, point):
        self.point = point
        super().__init__(f"Gauss map degenerate at {tuple(str(c) for c in point)}")


class NotNormalized(HarmGaussError):
    def __init__(self):
        super().__init__("surface is not normalized: first coordinate must be a(x, y) = x")


class NorthPole(HarmGaussError):
    def __init__(self):
        super().__init__("stereographic projection undefined at the north pole (0, 0, 1)")


class InvalidDistortion(HarmGaussError):
    def __init__(self, value):
        self.value = value
        super().__init__(f"squared distortion must be >= 1, got {value}")


class DegenerateSurface(HarmGaussError):
    def __init__(self):
        super().__init__("Y_x x Y_y vanishes identically; the surface has rank < 2 everywhere")


class NullViolation(HarmGaussError):
    def __init__(self, residual):
        self.residual = residual
        super().__init__("phi_1^2 + phi_2^2 + phi_3^2 is not the zero polynomial")
