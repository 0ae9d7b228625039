"""Random scattering matrices and the output covariance of two scattered modes.

Indices are 0-based: input channel ``k_prime`` and output channels ``l, m``
run over ``0 .. N-1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import IndexOutOfRange, InvalidDimension, OutOfRange, ValidationError
from .gaussian import GaussianInput, StandardForm, input_moments

UNITARY_ATOL = 1e-10


@dataclass(frozen=True)
class ModePair:
    k_prime: int
    l: int
    m: int

    def check(self, n: int) -> None:
        for name, idx in (("k_prime", self.k_prime), ("l", self.l), ("m", self.m)):
            if not 0 <= idx < n:
                raise IndexOutOfRange(f"{name}={idx} outside 0..{n - 1}")
        if self.l == self.m:
            raise IndexOutOfRange("output modes l and m must differ")

    def swapped(self) -> "ModePair":
        return ModePair(self.k_prime, self.m, self.l)


def haar_random(n: int, seed=0) -> np.ndarray:
    """Draw an ``n x n`` unitary from the Haar measure.

    ``seed`` is anything ``numpy.random.default_rng`` accepts (an integer or a
    ``SeedSequence``). A complex Ginibre matrix is QR-factorised and each
    column of Q is multiplied by the phase of the matching diagonal entry of
    R, which removes the bias of the factorisation's phase choice.
    """
    if n < 1:
        raise InvalidDimension(f"channel count must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def unitarity_residual(s: np.ndarray) -> float:
    s = np.asarray(s)
    return float(np.max(np.abs(s.conj().T @ s - np.eye(s.shape[0]))))


def check_scattering_matrix(s) -> np.ndarray:
    s = np.asarray(s, dtype=complex)
    if s.ndim != 2 or s.shape[0] != s.shape[1] or s.shape[0] < 1:
        raise InvalidDimension(f"scattering matrix must be square and non-empty, got {s.shape}")
    if unitarity_residual(s) >= UNITARY_ATOL:
        raise ValidationError("scattering matrix is not unitary")
    return s


def output_covariance(state: GaussianInput, s, pair: ModePair) -> np.ndarray:
    """Covariance of output modes ``(l, m)`` when only ``k_prime`` is occupied.

    With ``c = S[:, k_prime]`` and the input fluctuation moments
    ``(dn, daa)``, the entries for output modes ``i, j`` are::

        cov(x_i, x_j) = d_ij/2 + Re(c_i* c_j) dn + Re(c_i c_j daa)
        cov(p_i, p_j) = d_ij/2 + Re(c_i* c_j) dn - Re(c_i c_j daa)
        cov(x_i, p_j) =          Im(c_i* c_j) dn + Im(c_i c_j daa)

    ``cov(x_l, p_m)`` and ``cov(p_l, x_m)`` differ by ``2 Im(c_l* c_m) dn``,
    so both are built from their own index order.
    """
    s = check_scattering_matrix(s)
    pair.check(s.shape[0])
    dn, daa = input_moments(state)
    c = (s[pair.l, pair.k_prime], s[pair.m, pair.k_prime])

    sigma = np.empty((4, 4))
    for i in range(2):
        for j in range(2):
            w = np.conj(c[i]) * c[j] * dn
            y = c[i] * c[j] * daa
            vac = 0.5 if i == j else 0.0
            sigma[2 * i, 2 * j] = vac + w.real + y.real
            sigma[2 * i + 1, 2 * j + 1] = vac + w.real - y.real
            sigma[2 * i, 2 * j + 1] = w.imag + y.imag
    for i in range(2):
        for j in range(2):
            sigma[2 * i + 1, 2 * j] = sigma[2 * j, 2 * i + 1]
    return sigma


def thermal_covariance(n_bar: float, t_l: float, t_m: float) -> StandardForm:
    """Standard form of the output pair for a thermal input of mean photon number ``n_bar``.

    ``t_l`` and ``t_m`` are the transmission moduli ``|S[l, k']|`` and ``|S[m, k']|``.
    """
    if not n_bar >= 0.0:
        raise OutOfRange(f"n_bar must be >= 0, got {n_bar}")
    for name, t in (("t_l", t_l), ("t_m", t_m)):
        if not 0.0 <= t <= 1.0:
            raise OutOfRange(f"{name} must lie in [0, 1], got {t}")
    g = n_bar * t_l * t_m
    return StandardForm(n_bar * t_l * t_l + 0.5, n_bar * t_m * t_m + 0.5, g, g)
