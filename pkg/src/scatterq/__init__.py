"""Quantum correlations of Gaussian light scattered by a random linear medium."""

from .errors import (
    DivergentCorrelation,
    IndexOutOfRange,
    InvalidDimension,
    NegativeDiscriminant,
    NonPhysicalInput,
    NumericalDomainError,
    OutOfDomain,
    OutOfRange,
    ScatterqError,
    ValidationError,
)
from .gaussian import (
    Coherent,
    SecondMoments,
    Squeezed,
    StandardForm,
    Thermal,
    input_moments,
    invariants,
    standard_form,
    symplectic_spectrum,
    validate_physical,
)
from .measures import (
    CorrelationReport,
    SymplecticPair,
    correlation_report,
    entropy,
    gaussian_discord,
    intensity_correlation,
    is_separable,
    kappa,
    max_squeezed_correlation,
    symplectic_eigenvalues,
)
from .scatter import ModePair, haar_random, output_covariance, thermal_covariance

__version__ = "0.1.0"
