"""Loop kernels compiled with numba; same contracts as the numpy kernels."""

import math

import numpy as np
from numba import njit

TOL = 1e-9
DIVERGENCE_EPS = 1e-15

UNPHYSICAL, SEPARABLE, ENTANGLED = 0, 1, 2


@njit(cache=True)
def _eta_sq(det_a, det_b, det_g, det_s):
    delta = det_a + det_b + 2.0 * det_g
    disc = delta * delta - 4.0 * det_s
    if disc < 0.0:
        if disc < -TOL * max(1.0, delta * delta):
            return math.nan, math.nan
        disc = 0.0
    plus = 0.5 * (delta + math.sqrt(disc))
    if plus <= 0.0:
        return max(plus, 0.0), 0.0
    return plus, max(det_s / plus, 0.0)


@njit(cache=True)
def _kappa(z):
    if not z >= 0.5 - TOL:
        return math.nan
    if z <= 0.5:
        return 0.0
    lo = z - 0.5
    hi = z + 0.5
    return hi * math.log(hi) - lo * math.log(lo)


@njit(cache=True)
def _discord_one(a, b, gx, gp):
    ab = a * b
    det_g = gx * gp
    det_s = (ab - gx * gx) * (ab - gp * gp)
    plus, minus = _eta_sq(a * a, b * b, det_g, det_s)
    cond = (a + 2.0 * ab + 2.0 * det_g) / (1.0 + 2.0 * b)
    d = _kappa(b) - _kappa(math.sqrt(minus)) - _kappa(math.sqrt(plus)) + _kappa(cond)
    if d < 0.0:
        if d >= -TOL:
            return 0.0
        return math.nan
    return d


@njit(cache=True)
def _classify_one(a, b, gx, gp):
    ab = a * b
    rx = ab - gx * gx
    rp = ab - gp * gp
    det_s = rx * rp
    det_g = gx * gp
    if a < -TOL or b < -TOL or rx < -TOL or rp < -TOL:
        return UNPHYSICAL
    _, minus = _eta_sq(a * a, b * b, det_g, det_s)
    if not math.sqrt(minus) >= 0.5 - TOL:
        return UNPHYSICAL
    _, minus_t = _eta_sq(a * a, b * b, -det_g, det_s)
    if math.sqrt(minus_t) >= 0.5 - TOL:
        return SEPARABLE
    return ENTANGLED


@njit(cache=True)
def _correlation_one(a, b, gx, gp):
    num = 2.0 * gx * gx + 2.0 * gp * gp
    den = (2.0 * a - 1.0) * (2.0 * b - 1.0)
    if abs(den) < DIVERGENCE_EPS:
        if num < DIVERGENCE_EPS:
            return 1.0
        return math.inf
    return 1.0 + num / den


@njit(cache=True)
def _discord_flat(a, b, gx, gp, out):
    for i in range(out.size):
        out[i] = _discord_one(a[i], b[i], gx[i], gp[i])


@njit(cache=True)
def _classify_flat(a, b, gx, gp, out):
    for i in range(out.size):
        out[i] = _classify_one(a[i], b[i], gx[i], gp[i])


@njit(cache=True)
def _correlation_flat(a, b, gx, gp, out):
    for i in range(out.size):
        out[i] = _correlation_one(a[i], b[i], gx[i], gp[i])


def _flat(alpha, beta, gamma_x, gamma_p):
    arrs = np.broadcast_arrays(*(np.asarray(v, dtype=float) for v in (alpha, beta, gamma_x, gamma_p)))
    return arrs[0].shape, [np.ascontiguousarray(x).ravel() for x in arrs]


def discord(alpha, beta, gamma_x, gamma_p):
    """Gaussian discord measured on the beta mode."""
    shape, flat = _flat(alpha, beta, gamma_x, gamma_p)
    out = np.empty(flat[0].size)
    _discord_flat(*flat, out)
    return out.reshape(shape)


def classify(alpha, beta, gamma_x, gamma_p):
    shape, flat = _flat(alpha, beta, gamma_x, gamma_p)
    out = np.empty(flat[0].size, dtype=np.int8)
    _classify_flat(*flat, out)
    return out.reshape(shape)


def intensity_correlation(alpha, beta, gamma_x, gamma_p):
    shape, flat = _flat(alpha, beta, gamma_x, gamma_p)
    out = np.empty(flat[0].size)
    _correlation_flat(*flat, out)
    return out.reshape(shape)
