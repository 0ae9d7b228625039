"""Classification atlas of the (gamma_x, gamma_p) plane at fixed (alpha, beta)."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import OutOfDomain, OutOfRange
from .gaussian import VACUUM, StandardForm, is_physical_standard
from .measures import is_separable


class StateClass(enum.IntEnum):
    Unphysical = kernels.UNPHYSICAL
    Separable = kernels.SEPARABLE
    Entangled = kernels.ENTANGLED


def _check_diagonal(alpha, beta):
    if not (alpha >= VACUUM and beta >= VACUUM):
        raise OutOfDomain(f"alpha and beta must be >= 1/2, got {alpha}, {beta}")


def classify(alpha: float, beta: float, gamma_x: float, gamma_p: float) -> StateClass:
    _check_diagonal(alpha, beta)
    sf = StandardForm(alpha, beta, gamma_x, gamma_p)
    if not is_physical_standard(sf):
        return StateClass.Unphysical
    separable, _ = is_separable(sf)
    return StateClass.Separable if separable else StateClass.Entangled


def c2_circle_radius(alpha: float, beta: float) -> float:
    """Radius of the circle where the intensity correlation equals 2.

    Degenerates to 0 when either diagonal entry sits at the vacuum value.
    """
    _check_diagonal(alpha, beta)
    return math.sqrt((2.0 * alpha - 1.0) * (2.0 * beta - 1.0) / 2.0)


def default_extent(alpha: float, beta: float) -> float:
    # |gamma| < sqrt(alpha beta) is necessary for det sigma > 0
    return 1.05 * math.sqrt(alpha * beta)


@dataclass
class RegionGrid:
    """Filled map. ``classes[i, j]`` and ``c_values[i, j]`` belong to
    ``(gamma[i], gamma[j])`` as ``(gamma_x, gamma_p)``; divergent correlations
    are stored as ``inf``."""

    alpha: float
    beta: float
    extent: float
    gamma: np.ndarray
    classes: np.ndarray
    c_values: np.ndarray

    @property
    def resolution(self) -> int:
        return self.gamma.size

    @property
    def step(self) -> float:
        return float(self.gamma[1] - self.gamma[0])

    def rows(self):
        """Yield ``(gamma_x, gamma_p, StateClass, c_value)`` in row-major order."""
        for i, gx in enumerate(self.gamma):
            for j, gp in enumerate(self.gamma):
                yield float(gx), float(gp), StateClass(int(self.classes[i, j])), float(self.c_values[i, j])

    def fraction(self, cls: StateClass, of_physical: bool = True) -> float:
        hits = np.count_nonzero(self.classes == cls)
        if of_physical:
            total = np.count_nonzero(self.classes != StateClass.Unphysical)
        else:
            total = self.classes.size
        return hits / total if total else 0.0


def symmetric_axis(extent: float, resolution: int) -> np.ndarray:
    """Grid over ``[-extent, extent]`` that is exactly antisymmetric under reversal."""
    g = extent * np.linspace(-1.0, 1.0, resolution)
    return 0.5 * (g - g[::-1])


def region_map(alpha: float, beta: float, extent: float | None = None, resolution: int = 201) -> RegionGrid:
    _check_diagonal(alpha, beta)
    if extent is None:
        extent = default_extent(alpha, beta)
    if not extent > 0.0:
        raise OutOfRange(f"extent must be > 0, got {extent}")
    if resolution < 2:
        raise OutOfRange(f"resolution must be >= 2, got {resolution}")
    gamma = symmetric_axis(extent, resolution)
    gx, gp = np.meshgrid(gamma, gamma, indexing="ij")
    classes = kernels.classify(alpha, beta, gx, gp)
    c_values = kernels.intensity_correlation(alpha, beta, gx, gp)
    return RegionGrid(alpha, beta, extent, gamma, classes, c_values)
