class SourceError(Exception):
    """Exception raised when a source term cannot be loaded or evaluated."""

    code = "E-SOURCE"
