class DegenerateSystemError(Exception):
    """Exception raised when a 2x2 condition system has no unique solution.

    The condition report that produced the verdict is attached as ``report``.
    """

    code = "E-DEGENERATE"

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class DegenerateDenominatorError(DegenerateSystemError):
    """Raised when a closed-form basis has a vanishing denominator."""

    code = "E-DEGENERATE-DENOMINATOR"


class DegenerateModeError(DegenerateSystemError):
    """Raised when the condition system of one spectral mode is degenerate."""

    code = "E-DEGENERATE-MODE"

    def __init__(self, xi: int, report=None):
        super().__init__(f"Condition system of mode {xi} is degenerate", report)
        self.xi = xi
