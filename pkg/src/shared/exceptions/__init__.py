from shared.exceptions.validation_error import ValidationError, DomainError, SpecError
from shared.exceptions.numerical_error import (
    NumericalError,
    MLOverflowError,
    SingularInputError,
    NearBoundaryError,
    SingularAtZeroError,
    UnderflowError,
    QuadratureError,
    ZeroDataNormError,
)
from shared.exceptions.degenerate_system_error import (
    DegenerateSystemError,
    DegenerateDenominatorError,
    DegenerateModeError,
)
from shared.exceptions.source_error import SourceError

__all__ = [
    'ValidationError', 'DomainError', 'SpecError',
    'NumericalError', 'MLOverflowError', 'SingularInputError', 'NearBoundaryError',
    'SingularAtZeroError', 'UnderflowError', 'QuadratureError', 'ZeroDataNormError',
    'DegenerateSystemError', 'DegenerateDenominatorError', 'DegenerateModeError',
    'SourceError',
]
