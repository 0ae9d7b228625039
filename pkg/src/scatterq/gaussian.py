"""Gaussian input states and two-mode covariance matrices.

Conventions used throughout the package:

* quadratures are ordered ``(x_l, p_l, x_m, p_m)``;
* ``x = (b + b^dag)/sqrt(2)`` and ``p = (b - b^dag)/(i sqrt(2))``, so the
  vacuum has variance 1/2 and the uncertainty principle reads
  ``sigma + (i/2) Omega >= 0``, i.e. every symplectic eigenvalue is >= 1/2.

A two-mode covariance is a plain ``(4, 4)`` float array. ``StandardForm``
holds the four numbers ``(alpha, beta, gamma_x, gamma_p)`` of the canonical
reduction reachable by local symplectic transformations.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple, Union

import numpy as np

from .errors import NonPhysicalInput, OutOfRange, ValidationError

SYMMETRY_ATOL = 1e-12
TOL = 1e-9
VACUUM = 0.5

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Coherent:
    amplitude: complex = 0j


@dataclass(frozen=True)
class Thermal:
    n_bar: float

    def __post_init__(self):
        if not self.n_bar >= 0.0 or not math.isfinite(self.n_bar):
            raise OutOfRange(f"n_bar must be finite and >= 0, got {self.n_bar}")


@dataclass(frozen=True)
class Squeezed:
    r: float
    theta: float = 0.0

    def __post_init__(self):
        if not self.r >= 0.0 or not math.isfinite(self.r):
            raise OutOfRange(f"squeezing r must be finite and >= 0, got {self.r}")
        if not math.isfinite(self.theta):
            raise OutOfRange(f"theta must be finite, got {self.theta}")
        # keep theta in [0, 2 pi)
        theta = math.fmod(self.theta, TWO_PI)
        if theta < 0.0:
            theta += TWO_PI
        if theta >= TWO_PI:
            theta = 0.0
        object.__setattr__(self, "theta", theta)


GaussianInput = Union[Coherent, Thermal, Squeezed]


class SecondMoments(NamedTuple):
    """Fluctuation moments of the occupied input mode.

    ``delta_n = <a^dag a> - <a^dag><a>`` and ``delta_aa = <a a> - <a>^2``.
    """

    delta_n: float
    delta_aa: complex


def input_moments(state: GaussianInput) -> SecondMoments:
    if isinstance(state, Coherent):
        # displacement cancels in both moments
        return SecondMoments(0.0, 0j)
    if isinstance(state, Thermal):
        return SecondMoments(float(state.n_bar), 0j)
    if isinstance(state, Squeezed):
        sh, ch = math.sinh(state.r), math.cosh(state.r)
        return SecondMoments(sh * sh, -cmath.exp(1j * state.theta) * sh * ch)
    raise ValidationError(f"unknown input state {state!r}")


@dataclass(frozen=True)
class StandardForm:
    alpha: float
    beta: float
    gamma_x: float
    gamma_p: float

    def matrix(self) -> np.ndarray:
        a, b, gx, gp = self.alpha, self.beta, self.gamma_x, self.gamma_p
        return np.array(
            [
                [a, 0.0, gx, 0.0],
                [0.0, a, 0.0, gp],
                [gx, 0.0, b, 0.0],
                [0.0, gp, 0.0, b],
            ]
        )

    def swapped(self) -> "StandardForm":
        """Same state with the two modes exchanged."""
        return StandardForm(self.beta, self.alpha, self.gamma_x, self.gamma_p)

    def invariants(self) -> tuple[float, float, float, float]:
        a, b, gx, gp = self.alpha, self.beta, self.gamma_x, self.gamma_p
        ab = a * b
        return a * a, b * b, gx * gp, (ab - gx * gx) * (ab - gp * gp)


def as_covariance(sigma) -> np.ndarray:
    """Return ``sigma`` as a float (4, 4) array after shape and symmetry checks."""
    m = np.asarray(sigma, dtype=float)
    if m.shape != (4, 4):
        raise ValidationError(f"two-mode covariance must be 4x4, got {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValidationError("covariance contains non-finite entries")
    if np.max(np.abs(m - m.T)) > SYMMETRY_ATOL:
        raise ValidationError("covariance is not symmetric")
    return m


def _det2(m) -> float:
    return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]


def invariants(sigma) -> tuple[float, float, float, float]:
    """Local symplectic invariants ``(det A, det B, det Gamma, det sigma)``."""
    m = as_covariance(sigma)
    return (
        float(_det2(m[:2, :2])),
        float(_det2(m[2:, 2:])),
        float(_det2(m[:2, 2:])),
        float(np.linalg.det(m)),
    )


def eta_squared(det_a, det_b, det_gamma, det_sigma):
    """Squared symplectic eigenvalues ``(eta_plus^2, eta_minus^2)`` from invariants.

    Returns ``None`` for the discriminant when it is negative beyond tolerance
    so callers can raise their own error type. The tolerance scales with
    ``Delta^2`` because the discriminant is a difference of two such terms.
    """
    delta = det_a + det_b + 2.0 * det_gamma
    disc = delta * delta - 4.0 * det_sigma
    if disc < 0.0:
        if disc < -TOL * max(1.0, delta * delta):
            return None
        disc = 0.0
    plus = 0.5 * (delta + math.sqrt(disc))
    if plus <= 0.0:
        return max(plus, 0.0), 0.0
    # product form avoids cancellation in (delta - sqrt(disc))
    minus = det_sigma / plus
    return plus, max(minus, 0.0)


def symplectic_spectrum(sigma) -> tuple[float, float]:
    """Symplectic eigenvalues ``(eta_plus, eta_minus)`` of a covariance matrix.

    Computed as the moduli of the eigenvalues of ``R (i Omega) R`` with
    ``R = sigma^(1/2)``, which is Hermitian and well conditioned even when the
    invariants suffer cancellation. Requires ``sigma`` positive semidefinite.
    """
    m = as_covariance(sigma)
    w, v = np.linalg.eigh(m)
    if w[0] < -TOL:
        raise NonPhysicalInput("covariance is not positive semidefinite")
    root = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.T
    omega = np.zeros((4, 4))
    omega[0, 1] = omega[2, 3] = 1.0
    omega[1, 0] = omega[3, 2] = -1.0
    k = root @ (1j * omega) @ root
    ev = np.linalg.eigvalsh(k)
    # eigenvalues come in +/- eta pairs
    return float(ev[3]), float(ev[2])


def validate_physical(sigma) -> bool:
    """True when ``sigma`` is PSD and its smaller symplectic eigenvalue is >= 1/2."""
    m = as_covariance(sigma)
    if np.linalg.eigvalsh(m)[0] < -TOL:
        return False
    _, eta_minus = symplectic_spectrum(m)
    return eta_minus >= VACUUM - TOL


def is_physical_standard(sf: StandardForm) -> bool:
    """Closed-form physicality test for a standard form.

    Equivalent to ``validate_physical(sf.matrix())`` and exactly even in
    ``gamma_p``, which the region maps rely on.
    """
    a, b, gx, gp = sf.alpha, sf.beta, sf.gamma_x, sf.gamma_p
    ab = a * b
    if a < -TOL or b < -TOL or ab - gx * gx < -TOL or ab - gp * gp < -TOL:
        return False
    sq = eta_squared(*sf.invariants())
    if sq is None:
        return False
    return math.sqrt(sq[1]) >= VACUUM - TOL


def _sqrt_unimodular(m: np.ndarray) -> np.ndarray:
    # principal square root of a 2x2 SPD matrix with det 1
    s = math.sqrt(m[0, 0] + m[1, 1] + 2.0)
    return (m + np.eye(2)) / s


def _inv_unimodular(t: np.ndarray) -> np.ndarray:
    return np.array([[t[1, 1], -t[0, 1]], [-t[1, 0], t[0, 0]]])


def _signed_singular_values(g: np.ndarray) -> tuple[float, float]:
    # g = R1 diag(s1, s2) R2^T with R1, R2 rotations, s1 >= |s2|
    e = 0.5 * (g[0, 0] + g[1, 1])
    f = 0.5 * (g[0, 0] - g[1, 1])
    h = 0.5 * (g[1, 0] - g[0, 1])
    k = 0.5 * (g[1, 0] + g[0, 1])
    q = math.hypot(e, h)
    r = math.hypot(f, k)
    return q + r, q - r


def standard_form(sigma) -> StandardForm:
    """Reduce a physical two-mode covariance to ``(alpha, beta, gamma_x, gamma_p)``.

    Each local block is first brought to a multiple of the identity by the
    symplectic map ``(A / sqrt(det A))^(-1/2)``; the correlation block is then
    diagonalised with local rotations. The result has ``gamma_x >= |gamma_p|``
    and carries the sign of ``det Gamma`` on ``gamma_p``.

    Raises ``NonPhysicalInput`` when a local block is not positive definite or
    the invariants admit no real ``(gamma_x^2, gamma_p^2)``.
    """
    m = as_covariance(sigma)
    a_blk, b_blk, g_blk = m[:2, :2], m[2:, 2:], m[:2, 2:]
    det_a, det_b = _det2(a_blk), _det2(b_blk)
    if det_a <= 0.0 or a_blk[0, 0] <= 0.0 or det_b <= 0.0 or b_blk[0, 0] <= 0.0:
        raise NonPhysicalInput("local covariance blocks must be positive definite")

    det_g = _det2(g_blk)
    det_s = float(np.linalg.det(m))
    alpha, beta = math.sqrt(det_a), math.sqrt(det_b)
    ab = alpha * beta
    s = (ab * ab + det_g * det_g - det_s) / ab
    disc = s * s - 4.0 * det_g * det_g
    scale = max(1.0, s * s)
    if disc < -TOL * scale or s < -TOL * max(1.0, abs(s)):
        raise NonPhysicalInput(
            f"covariance invariants admit no standard form (discriminant {disc:.3g})"
        )

    ta = _sqrt_unimodular(a_blk / alpha)
    tb = _sqrt_unimodular(b_blk / beta)
    g = _inv_unimodular(ta) @ g_blk @ _inv_unimodular(tb)
    gx, gp = _signed_singular_values(g)
    return StandardForm(alpha, beta, gx, gp)
