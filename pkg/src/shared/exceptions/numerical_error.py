class NumericalError(Exception):
    """Base class for failures while evaluating a numerical quantity."""

    code = "E-NUMERICAL"


class MLOverflowError(NumericalError):
    """Raised when a Mittag-Leffler value exceeds the representable range."""

    code = "E-ML-OVERFLOW"


class SingularInputError(NumericalError):
    """Raised when sampled data is non-finite without a declared singular exponent."""

    code = "E-SINGULAR-INPUT"


class NearBoundaryError(NumericalError):
    """Raised when a stencil needs nodes that are not available near t = 0."""

    code = "E-NEAR-BOUNDARY"


class SingularAtZeroError(NumericalError):
    """Raised when a quantity is evaluated at t = 0 where it diverges."""

    code = "E-SINGULAR-AT-ZERO"


class UnderflowError(NumericalError):
    """Raised when a quantity vanishes identically where a logarithm is needed."""

    code = "E-UNDERFLOW"


class QuadratureError(NumericalError):
    """Raised when a quadrature produces a non-finite result."""

    code = "E-QUADRATURE"


class ZeroDataNormError(NumericalError, ZeroDivisionError):
    """Raised when a ratio is normalised by data that vanish identically."""

    code = "E-ZERO-DATA"
