"""Exception types.

Two families: ``ValidationError`` for bad arguments (bad indices, dimensions,
parameters out of range) and ``NumericalDomainError`` for inputs that are
well-formed but land outside the domain of a formula. The CLI maps the first
to exit code 2 and the second to exit code 3.
"""


class ScatterqError(Exception):
    """Base class for all package errors."""


class ValidationError(ScatterqError, ValueError):
    pass


class InvalidDimension(ValidationError):
    pass


class IndexOutOfRange(ValidationError, IndexError):
    pass


class OutOfRange(ValidationError):
    pass


class NumericalDomainError(ScatterqError, ArithmeticError):
    pass


class NonPhysicalInput(NumericalDomainError):
    pass


class NegativeDiscriminant(NumericalDomainError):
    pass


class DivergentCorrelation(NumericalDomainError):
    pass


class OutOfDomain(NumericalDomainError):
    pass
