import numpy as np
import pytest

from scatterq.errors import InvalidDimension, OutOfRange
from scatterq.ensemble import (
    ANALYTIC,
    EnsembleConfig,
    discord_surface,
    mean_discord_analytic,
    mean_discord_mc,
    sweep_fig4,
    thermal_trial,
    trial_discords,
    trial_seed,
)
from scatterq.gaussian import validate_physical
from scatterq.scatter import haar_random


def test_analytic_limits():
    for n in (2, 5, 64):
        assert mean_discord_analytic(0.0, n) == 0.0
    assert mean_discord_analytic(10.0, 10**7) < 1e-9
    assert mean_discord_analytic(1e3, 2) > mean_discord_analytic(1e3, 10)


def test_analytic_rejects_bad_input():
    with pytest.raises(InvalidDimension):
        mean_discord_analytic(1.0, 1)
    with pytest.raises(OutOfRange):
        mean_discord_analytic(-1.0, 4)


def test_sweep_single_point():
    rows = sweep_fig4([1], [2])
    assert rows == [(1.0, 2, mean_discord_analytic(1, 2), None)]


def test_sweep_monotone():
    col = [r[2] for r in sweep_fig4([1, 10, 100, 1000], [4])]
    assert all(b > a for a, b in zip(col, col[1:]))
    col = [r[2] for r in sweep_fig4([100], [2, 4, 8, 16, 32])]
    assert all(b < a for a, b in zip(col, col[1:]))


def test_sweep_validation():
    with pytest.raises(OutOfRange):
        sweep_fig4([], [2])
    with pytest.raises(OutOfRange):
        sweep_fig4([1], [2], method="exact")


def test_config_validation():
    with pytest.raises(InvalidDimension):
        EnsembleConfig(1, 1.0)
    with pytest.raises(OutOfRange):
        EnsembleConfig(4, 1.0, trials=0)


def test_zero_photons_gives_zero_mean():
    stat = mean_discord_mc(EnsembleConfig(2, 0.0, trials=50, master_seed=3))
    assert stat.mean == 0.0
    assert stat.std_error == 0.0


def test_trial_seeds_are_distinct_and_stable():
    a = haar_random(4, trial_seed(9, 0))
    assert np.array_equal(a, haar_random(4, trial_seed(9, 0)))
    assert not np.array_equal(a, haar_random(4, trial_seed(9, 1)))
    assert not np.array_equal(a, haar_random(4, trial_seed(10, 0)))


def test_trials_are_physical():
    cfg = EnsembleConfig(6, 50.0, trials=200, master_seed=1)
    for i in range(cfg.trials):
        assert validate_physical(thermal_trial(cfg, i))


def test_parallel_schedule_does_not_change_results():
    cfg = EnsembleConfig(4, 5.0, trials=400, master_seed=11)
    serial = trial_discords(cfg, workers=1)
    parallel = trial_discords(cfg, workers=3)
    assert np.array_equal(serial, parallel)


@pytest.mark.slow
def test_mc_deterministic():
    cfg = EnsembleConfig(4, 1.0, trials=10_000, master_seed=7)
    assert mean_discord_mc(cfg) == mean_discord_mc(cfg)


@pytest.mark.slow
def test_mc_orders_by_channel_count():
    few = mean_discord_mc(EnsembleConfig(2, 10.0, trials=10_000, master_seed=1))
    many = mean_discord_mc(EnsembleConfig(8, 10.0, trials=10_000, master_seed=2))
    gap = few.mean - many.mean
    assert gap > 3 * np.hypot(few.std_error, many.std_error)


def test_haar_intensity_mean():
    for n in (2, 4, 16):
        x = np.array([abs(haar_random(n, trial_seed(5, i))[1, 0]) ** 2 for i in range(10_000)])
        assert abs(x.mean() - 1 / n) < 0.05 / n


def test_pair_choice_is_statistically_equivalent():
    """By Haar invariance any fixed output pair gives the same discord statistics."""
    from scatterq.gaussian import Thermal, standard_form
    from scatterq.measures import gaussian_discord
    from scatterq.scatter import ModePair, output_covariance

    n, trials = 5, 3000
    a, b = [], []
    for i in range(trials):
        s = haar_random(n, trial_seed(21, i))
        a.append(gaussian_discord(standard_form(output_covariance(Thermal(20.0), s, ModePair(0, 0, 1))), "first"))
        b.append(gaussian_discord(standard_form(output_covariance(Thermal(20.0), s, ModePair(3, 4, 2))), "first"))
    a, b = np.array(a), np.array(b)
    se = np.hypot(a.std(ddof=1), b.std(ddof=1)) / np.sqrt(trials)
    assert abs(a.mean() - b.mean()) < 4 * se


def test_discord_surface_shape_and_mask():
    t, d = discord_surface(10.0, resolution=11)
    assert t[0] == pytest.approx(0.01) and t[-1] == 1.0
    assert d.shape == (11, 11)
    assert np.all(d > 0)
    _, masked = discord_surface(10.0, resolution=11, physical_only=True)
    tl, tm = np.meshgrid(t, t, indexing="ij")
    assert np.all(np.isnan(masked[tl**2 + tm**2 > 1]))
    assert np.array_equal(masked[tl**2 + tm**2 <= 1], d[tl**2 + tm**2 <= 1])
