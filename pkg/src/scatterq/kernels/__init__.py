"""Batch kernels over arrays of standard-form parameters.

Two interchangeable backends: numba-compiled loops and vectorised numpy.
numba is used when importable unless ``SCATTERQ_NUMBA=0`` is set in the
environment. Both backends return identical classes and agree on the float
outputs to rounding.
"""

import os

from . import _numpy

UNPHYSICAL, SEPARABLE, ENTANGLED = _numpy.UNPHYSICAL, _numpy.SEPARABLE, _numpy.ENTANGLED


def _load_numba():
    if os.environ.get("SCATTERQ_NUMBA", "1").strip().lower() in ("0", "false", "no", "off"):
        return None
    try:
        from . import _numba
    except ImportError:
        return None
    return _numba


_accelerated = _load_numba()
backend = _accelerated if _accelerated is not None else _numpy
BACKEND_NAME = "numba" if _accelerated is not None else "numpy"


def get_backend(name: str):
    """Return the kernel module called ``name`` ("numba" or "numpy")."""
    if name == "numpy":
        return _numpy
    if name == "numba":
        from . import _numba

        return _numba
    raise ValueError(f"unknown kernel backend {name!r}")


def discord(alpha, beta, gamma_x, gamma_p):
    return backend.discord(alpha, beta, gamma_x, gamma_p)


def classify(alpha, beta, gamma_x, gamma_p):
    return backend.classify(alpha, beta, gamma_x, gamma_p)


def intensity_correlation(alpha, beta, gamma_x, gamma_p):
    return backend.intensity_correlation(alpha, beta, gamma_x, gamma_p)
