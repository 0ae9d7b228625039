"""Mean discord over ensembles of random scattering matrices.

Two routes:

* ``mean_discord_analytic`` plugs typical transmission values into the
  thermal standard form: ``|S|^2 = 1/N`` for the intensities and
  ``|S_l||S_m| = <|S|>^2`` with ``<|S|> = <|S|^2>/2 = 1/(2N)``. That last
  relation is not the Rayleigh mean amplitude (``sqrt(pi/(4N))``); it is a
  fixed substitution, not an ensemble average.
* ``mean_discord_mc`` samples Haar unitaries and averages the discord of the
  actual thermal output covariance.

Monte Carlo trials draw from their own ``SeedSequence(master_seed,
spawn_key=(index,))`` stream, so results do not depend on how trials are
split across workers.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import InvalidDimension, OutOfDomain, OutOfRange
from .gaussian import Thermal, standard_form
from .scatter import ModePair, haar_random, output_covariance

ANALYTIC = "analytic"
MC = "mc"

# measurement on mode l, as in the discord surfaces
MC_PAIR = ModePair(0, 0, 1)


@dataclass(frozen=True)
class EnsembleConfig:
    N: int
    n_bar: float
    trials: int = 10_000
    master_seed: int = 0

    def __post_init__(self):
        if self.N < 2:
            raise InvalidDimension(f"ensemble needs N >= 2, got {self.N}")
        if self.trials < 1:
            raise OutOfRange(f"trials must be >= 1, got {self.trials}")
        if not self.n_bar >= 0.0:
            raise OutOfRange(f"n_bar must be >= 0, got {self.n_bar}")
        if not 0 <= self.master_seed < 2**64:
            raise OutOfRange("master_seed must be an unsigned 64-bit integer")


@dataclass(frozen=True)
class EnsembleStat:
    mean: float
    std_error: float
    trials: int


def trial_seed(master_seed: int, index: int) -> np.random.SeedSequence:
    return np.random.SeedSequence(master_seed, spawn_key=(index,))


def mean_discord_analytic(n_bar: float, N: int) -> float:
    if N < 2:
        raise InvalidDimension(f"ensemble needs N >= 2, got {N}")
    if not n_bar >= 0.0:
        raise OutOfRange(f"n_bar must be >= 0, got {n_bar}")
    intensity = 1.0 / N
    amplitude = intensity / 2.0
    alpha = n_bar * intensity + 0.5
    gamma = n_bar * amplitude * amplitude
    return float(kernels.discord(alpha, alpha, gamma, gamma))


def thermal_trial(cfg: EnsembleConfig, index: int) -> np.ndarray:
    """Output covariance of the fixed mode pair for trial ``index``."""
    s = haar_random(cfg.N, trial_seed(cfg.master_seed, index))
    return output_covariance(Thermal(cfg.n_bar), s, MC_PAIR)


def _trial_discords(cfg: EnsembleConfig, start: int, stop: int) -> np.ndarray:
    forms = np.empty((stop - start, 4))
    for row, index in enumerate(range(start, stop)):
        sf = standard_form(thermal_trial(cfg, index))
        forms[row] = (sf.alpha, sf.beta, sf.gamma_x, sf.gamma_p)
    # measured on mode l: the alpha block plays the measured role
    return kernels.discord(forms[:, 1], forms[:, 0], forms[:, 2], forms[:, 3])


def _chunks(trials: int, parts: int):
    bounds = np.linspace(0, trials, parts + 1).astype(int)
    return [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]


def trial_discords(cfg: EnsembleConfig, workers: int = 1) -> np.ndarray:
    """Per-trial discords in trial-index order."""
    if workers <= 1:
        return _trial_discords(cfg, 0, cfg.trials)
    chunks = _chunks(cfg.trials, workers * 4)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_trial_discords, [cfg] * len(chunks), *zip(*chunks)))
    return np.concatenate(parts)


def mean_discord_mc(cfg: EnsembleConfig, workers: int = 1) -> EnsembleStat:
    d = trial_discords(cfg, workers)
    if np.isnan(d).any():
        raise OutOfDomain("discord undefined for a sampled trial")
    mean = float(d.mean())
    se = float(d.std(ddof=1) / math.sqrt(d.size)) if d.size > 1 else 0.0
    return EnsembleStat(mean, se, int(d.size))


def sweep_fig4(
    n_bar_grid,
    N_grid,
    method: str = ANALYTIC,
    trials: int = 10_000,
    master_seed: int = 0,
    workers: int = 1,
) -> list[tuple[float, int, float, float | None]]:
    """Table of ``(n_bar, N, mean_discord, std_error)`` rows, n_bar-major.

    ``std_error`` is ``None`` for the analytic method.
    """
    n_bar_grid = list(n_bar_grid)
    N_grid = list(N_grid)
    if not n_bar_grid or not N_grid:
        raise OutOfRange("sweep grids must be non-empty")
    if method not in (ANALYTIC, MC):
        raise OutOfRange(f"unknown method {method!r}")
    rows = []
    for n_bar in n_bar_grid:
        for N in N_grid:
            if method == ANALYTIC:
                rows.append((float(n_bar), int(N), mean_discord_analytic(n_bar, N), None))
            else:
                stat = mean_discord_mc(EnsembleConfig(int(N), float(n_bar), trials, master_seed), workers)
                rows.append((float(n_bar), int(N), stat.mean, stat.std_error))
    return rows


def discord_surface(n_bar: float, resolution: int = 101, t_min: float = 0.01, physical_only: bool = False):
    """Thermal-input discord over a ``(t_l, t_m)`` grid, measured on mode l.

    Returns ``(t, D)`` with ``D[i, j]`` at ``(t_l, t_m) = (t[i], t[j])``.
    With ``physical_only`` the points with ``t_l^2 + t_m^2 > 1`` are NaN.
    """
    if resolution < 2:
        raise OutOfRange(f"resolution must be >= 2, got {resolution}")
    if not n_bar >= 0.0:
        raise OutOfRange(f"n_bar must be >= 0, got {n_bar}")
    t = np.linspace(t_min, 1.0, resolution)
    tl, tm = np.meshgrid(t, t, indexing="ij")
    alpha = n_bar * tl * tl + 0.5
    beta = n_bar * tm * tm + 0.5
    gamma = n_bar * tl * tm
    d = kernels.discord(beta, alpha, gamma, gamma)
    if physical_only:
        d = np.where(tl * tl + tm * tm > 1.0, np.nan, d)
    return t, d

