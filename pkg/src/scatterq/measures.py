"""Correlation measures for two output modes.

Intensity correlation, the partial-transpose separability test, the bosonic
entropy function and the closed-form Gaussian discord.

The entropy function is the standard one,
``kappa(z) = (z + 1/2) ln(z + 1/2) - (z - 1/2) ln(z - 1/2)``, which is
non-negative and gives non-negative mutual information. Writing a plus sign
between the two terms makes thermal entropies negative.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import NamedTuple

from .errors import DivergentCorrelation, NegativeDiscriminant, OutOfDomain, ValidationError
from .gaussian import (
    TOL,
    VACUUM,
    StandardForm,
    eta_squared,
    invariants,
    standard_form,
    symplectic_spectrum,
    validate_physical,
)

DIVERGENCE_EPS = 1e-15

FIRST = "first"
SECOND = "second"


class SymplecticPair(NamedTuple):
    eta_plus: float
    eta_minus: float

    @classmethod
    def ordered(cls, a: float, b: float) -> "SymplecticPair":
        return cls(max(a, b), min(a, b))


@dataclass(frozen=True)
class CorrelationReport:
    c_value: float
    physical: bool
    separable: bool
    eta_tilde_minus: float
    discord_measured_on_l: float
    discord_measured_on_m: float

    def to_dict(self) -> dict:
        return asdict(self)


def symplectic_eigenvalues(det_a, det_b, det_gamma, det_sigma) -> SymplecticPair:
    sq = eta_squared(det_a, det_b, det_gamma, det_sigma)
    if sq is None:
        raise NegativeDiscriminant(
            f"negative discriminant for invariants {(det_a, det_b, det_gamma, det_sigma)}"
        )
    return SymplecticPair.ordered(math.sqrt(sq[0]), math.sqrt(sq[1]))


def is_separable(sf: StandardForm) -> tuple[bool, float]:
    """Separability of a two-mode Gaussian state via its partial transpose.

    Flipping the sign of one momentum turns ``det Gamma`` into
    ``-gamma_x gamma_p`` and leaves the other invariants unchanged; the state
    is separable iff the smaller symplectic eigenvalue of the flipped matrix
    is still >= 1/2. Returns ``(separable, eta_tilde_minus)``.
    """
    det_a, det_b, det_g, det_s = sf.invariants()
    pair = symplectic_eigenvalues(det_a, det_b, -det_g, det_s)
    return pair.eta_minus >= VACUUM - TOL, pair.eta_minus


def intensity_correlation(sf: StandardForm) -> float:
    num = 2.0 * sf.gamma_x**2 + 2.0 * sf.gamma_p**2
    den = (2.0 * sf.alpha - 1.0) * (2.0 * sf.beta - 1.0)
    if abs(den) < DIVERGENCE_EPS:
        if num < DIVERGENCE_EPS:
            # coherent-state limit
            return 1.0
        raise DivergentCorrelation(f"intensity correlation diverges for {sf}")
    return 1.0 + num / den


def kappa(z: float) -> float:
    if not z >= VACUUM - TOL:
        raise OutOfDomain(f"kappa needs z >= 1/2, got {z}")
    if z <= VACUUM:
        return 0.0
    lo = z - 0.5
    hi = z + 0.5
    return hi * math.log(hi) - lo * math.log(lo)


def entropy(sigma) -> float:
    """Von Neumann entropy of a two-mode Gaussian state, in nats."""
    eta_plus, eta_minus = symplectic_spectrum(sigma)
    return kappa(eta_plus) + kappa(eta_minus)


def mutual_information(sigma) -> float:
    det_a, det_b, _, _ = invariants(sigma)
    return kappa(math.sqrt(det_a)) + kappa(math.sqrt(det_b)) - entropy(sigma)


def gaussian_discord(sf: StandardForm, measured_mode: str = SECOND) -> float:
    """Gaussian discord with a Gaussian measurement on ``measured_mode``.

    ``measured_mode`` is ``"first"`` (mode l, the alpha block) or ``"second"``
    (mode m, the beta block). The joint-entropy term uses the symplectic
    eigenvalues of the state itself, not of its partial transpose.
    """
    if measured_mode == FIRST:
        sf = sf.swapped()
    elif measured_mode != SECOND:
        raise ValidationError(f"measured_mode must be 'first' or 'second', got {measured_mode!r}")

    det_a, det_b, det_g, det_s = sf.invariants()
    pair = symplectic_eigenvalues(det_a, det_b, det_g, det_s)
    root_a = math.sqrt(det_a)
    root_b = math.sqrt(det_b)
    conditional = (root_a + 2.0 * root_a * root_b + 2.0 * det_g) / (1.0 + 2.0 * root_b)
    d = kappa(root_b) - kappa(pair.eta_minus) - kappa(pair.eta_plus) + kappa(conditional)
    if d < 0.0:
        if d < -TOL:
            raise OutOfDomain(f"negative discord {d} for {sf}")
        d = 0.0
    return d


def max_squeezed_correlation(n_bar: float, t_l: float, t_m: float) -> float:
    """Largest intensity correlation reachable by a squeezed input for given transmissions."""
    if not (n_bar > 0.0 and t_l > 0.0 and t_m > 0.0):
        raise OutOfDomain("n_bar, t_l and t_m must be strictly positive")
    # (t_l/t_m + t_m/t_l) keeps the t_l == t_m case exactly 2 + 1/n_bar
    return 2.0 + (t_l / t_m + t_m / t_l) / (2.0 * n_bar)


def correlation_report(sigma) -> CorrelationReport:
    """Evaluate every measure on one two-mode covariance."""
    sf = standard_form(sigma)
    separable, eta_tilde = is_separable(sf)
    return CorrelationReport(
        c_value=intensity_correlation(sf),
        physical=validate_physical(sigma),
        separable=separable,
        eta_tilde_minus=eta_tilde,
        discord_measured_on_l=gaussian_discord(sf, FIRST),
        discord_measured_on_m=gaussian_discord(sf, SECOND),
    )
