class ValidationError(Exception):
    """Exception raised when an input or configuration fails validation."""

    def __init__(self, message: str, code: str = "E-VALIDATION"):
        super().__init__(message)
        self.code = code


class DomainError(ValidationError):
    """Exception raised when an operator order lies outside its admissible range."""
    pass


class SpecError(ValidationError):
    """Exception raised when condition data make a problem ill-posed."""
    pass
