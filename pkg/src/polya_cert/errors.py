"""Exception hierarchy for polya_cert."""


class PolyaError(ValueError):
    """Base class for all errors raised by this package."""


class DimensionError(PolyaError):
    """Variable count, matrix size or vector length mismatch."""


class DegreeError(PolyaError):
    """A multi-index does not have the expected length."""


class AsymmetricMatrixError(PolyaError):
    def __init__(self, i, j, message=None):
        self.i, self.j = i, j
        super().__init__(message or f"matrix is not symmetric at ({i}, {j})")


class SimplexError(PolyaError):
    """A point does not lie on the standard simplex."""


class CertificateError(PolyaError):
    """A certificate is structurally inconsistent with the form it claims to certify."""


class MarginError(PolyaError):
    """Margin requested on a grid that contains a non positive definite point."""


class ParseError(PolyaError):
    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)
