"""Vectorised numpy kernels over arrays of standard-form parameters.

Out-of-domain points yield NaN instead of raising.
"""

import numpy as np

TOL = 1e-9
DIVERGENCE_EPS = 1e-15

UNPHYSICAL, SEPARABLE, ENTANGLED = 0, 1, 2


def eta_squared(det_a, det_b, det_g, det_s):
    delta = det_a + det_b + 2.0 * det_g
    disc = delta * delta - 4.0 * det_s
    bad = disc < -TOL * np.maximum(1.0, delta * delta)
    disc = np.where(disc < 0.0, 0.0, disc)
    plus = 0.5 * (delta + np.sqrt(disc))
    with np.errstate(divide="ignore", invalid="ignore"):
        minus = np.where(plus > 0.0, det_s / plus, 0.0)
    plus = np.maximum(plus, 0.0)
    minus = np.maximum(minus, 0.0)
    plus = np.where(bad, np.nan, plus)
    minus = np.where(bad, np.nan, minus)
    return plus, minus


def kappa(z):
    z = np.asarray(z, dtype=float)
    out = np.full(z.shape, np.nan)
    ok = z >= 0.5 - TOL
    zz = np.where(ok, np.maximum(z, 0.5), 0.5)
    lo = zz - 0.5
    hi = zz + 0.5
    with np.errstate(divide="ignore", invalid="ignore"):
        val = hi * np.log(hi) - np.where(lo > 0.0, lo * np.log(np.where(lo > 0.0, lo, 1.0)), 0.0)
    out[ok] = val[ok]
    return out


def discord(alpha, beta, gamma_x, gamma_p):
    """Gaussian discord measured on the beta mode."""
    alpha, beta, gamma_x, gamma_p = np.broadcast_arrays(
        *(np.asarray(v, dtype=float) for v in (alpha, beta, gamma_x, gamma_p))
    )
    ab = alpha * beta
    det_a = alpha * alpha
    det_b = beta * beta
    det_g = gamma_x * gamma_p
    det_s = (ab - gamma_x * gamma_x) * (ab - gamma_p * gamma_p)
    plus, minus = eta_squared(det_a, det_b, det_g, det_s)
    cond = (alpha + 2.0 * ab + 2.0 * det_g) / (1.0 + 2.0 * beta)
    d = kappa(beta) - kappa(np.sqrt(minus)) - kappa(np.sqrt(plus)) + kappa(cond)
    d = np.where((d < 0.0) & (d >= -TOL), 0.0, d)
    return np.where(d < 0.0, np.nan, d)


def _eta_minus(alpha, beta, det_g, det_s):
    _, minus = eta_squared(alpha * alpha, beta * beta, det_g, det_s)
    return np.sqrt(minus)


def classify(alpha, beta, gamma_x, gamma_p):
    alpha, beta, gamma_x, gamma_p = np.broadcast_arrays(
        *(np.asarray(v, dtype=float) for v in (alpha, beta, gamma_x, gamma_p))
    )
    ab = alpha * beta
    rx = ab - gamma_x * gamma_x
    rp = ab - gamma_p * gamma_p
    det_s = rx * rp
    det_g = gamma_x * gamma_p
    psd = (alpha >= -TOL) & (beta >= -TOL) & (rx >= -TOL) & (rp >= -TOL)
    with np.errstate(invalid="ignore"):
        physical = psd & (_eta_minus(alpha, beta, det_g, det_s) >= 0.5 - TOL)
        separable = _eta_minus(alpha, beta, -det_g, det_s) >= 0.5 - TOL
    out = np.full(alpha.shape, UNPHYSICAL, dtype=np.int8)
    out[physical & separable] = SEPARABLE
    out[physical & ~separable] = ENTANGLED
    return out


def intensity_correlation(alpha, beta, gamma_x, gamma_p):
    """Intensity correlation; 1 at the coherent 0/0 point, +inf where it diverges."""
    alpha, beta, gamma_x, gamma_p = np.broadcast_arrays(
        *(np.asarray(v, dtype=float) for v in (alpha, beta, gamma_x, gamma_p))
    )
    num = 2.0 * gamma_x * gamma_x + 2.0 * gamma_p * gamma_p
    den = (2.0 * alpha - 1.0) * (2.0 * beta - 1.0)
    small = np.abs(den) < DIVERGENCE_EPS
    with np.errstate(divide="ignore", invalid="ignore"):
        c = 1.0 + num / np.where(small, 1.0, den)
    c = np.where(small, np.where(num < DIVERGENCE_EPS, 1.0, np.inf), c)
    return c
