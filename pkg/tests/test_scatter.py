import math

import numpy as np
import pytest
from scipy import stats

from oracles import pair_covariance, single_mode_covariance
from scatterq.errors import IndexOutOfRange, InvalidDimension, OutOfRange
from scatterq.gaussian import Coherent, Squeezed, Thermal, input_moments, standard_form, validate_physical
from scatterq.measures import intensity_correlation, is_separable
from scatterq.scatter import (
    ModePair,
    haar_random,
    output_covariance,
    thermal_covariance,
    unitarity_residual,
)

STATES = [Coherent(1 + 1j), Thermal(2.5), Squeezed(0.5, math.pi / 3), Squeezed(1.0, 0.0)]


def test_haar_single_channel_is_a_phase():
    for seed in range(10):
        s = haar_random(1, seed)
        assert s.shape == (1, 1)
        assert abs(s[0, 0]) == pytest.approx(1.0, abs=1e-14)


@pytest.mark.parametrize("n", [2, 4, 7, 16, 33])
def test_haar_is_unitary(n):
    s = haar_random(n, 42)
    assert unitarity_residual(s) < 1e-10
    assert np.allclose(np.linalg.norm(s, axis=0), 1.0, atol=1e-10)


def test_haar_deterministic():
    a = haar_random(6, 123)
    b = haar_random(6, 123)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, haar_random(6, 124))


def test_haar_rejects_zero_dimension():
    with pytest.raises(InvalidDimension):
        haar_random(0, 1)


def test_haar_intensity_follows_beta_law():
    # |S_lk|^2 of a Haar unitary is Beta(1, N-1) distributed
    n = 5
    samples = np.array([abs(haar_random(n, seed)[2, 3]) ** 2 for seed in range(3000)])
    assert stats.kstest(samples, stats.beta(1, n - 1).cdf).pvalue > 1e-3


def test_haar_phase_of_diagonal_is_uniform():
    # without the phase correction the diagonal of Q is biased towards the real axis
    phases = np.array([np.angle(haar_random(3, seed)[0, 0]) for seed in range(3000)])
    assert stats.kstest(phases, stats.uniform(-np.pi, 2 * np.pi).cdf).pvalue > 1e-3


@pytest.mark.parametrize("state", STATES, ids=lambda s: type(s).__name__)
def test_output_covariance_matches_full_propagation(state):
    s = haar_random(6, 9)
    single = single_mode_covariance(*input_moments(state))
    for pair in [ModePair(0, 1, 2), ModePair(3, 5, 0), ModePair(2, 2, 4)]:
        got = output_covariance(state, s, pair)
        ref = pair_covariance(single, s, pair.k_prime, pair.l, pair.m)
        assert np.max(np.abs(got - ref)) < 1e-12


def test_coherent_output_is_vacuum():
    for seed in range(20):
        s = haar_random(3 + seed % 5, seed)
        sigma = output_covariance(Coherent(5 - 2j), s, ModePair(0, 0, 1))
        assert np.max(np.abs(sigma - 0.5 * np.eye(4))) < 1e-12


def test_thermal_output_matches_closed_form():
    s = haar_random(5, 3)
    pair = ModePair(1, 2, 4)
    sigma = output_covariance(Thermal(3.0), s, pair)
    sf = standard_form(sigma)
    ref = thermal_covariance(3.0, abs(s[2, 1]), abs(s[4, 1]))
    assert (sf.alpha, sf.beta, sf.gamma_x, sf.gamma_p) == pytest.approx(
        (ref.alpha, ref.beta, ref.gamma_x, ref.gamma_p), rel=1e-12
    )


def test_squeezed_real_column_has_no_xp_correlation():
    s = haar_random(4, 11)
    # make column 0 real while staying unitary: strip the phases row-wise
    s = np.diag(np.exp(-1j * np.angle(s[:, 0]))) @ s
    sigma = output_covariance(Squeezed(1.0, 0.0), s, ModePair(0, 1, 3))
    assert abs(sigma[0, 3]) < 1e-12
    assert abs(sigma[1, 2]) < 1e-12


def test_cross_quadrature_entries_differ_by_z_term():
    s = haar_random(4, 5)
    dn = 2.0
    sigma = output_covariance(Thermal(dn), s, ModePair(0, 0, 1))
    z = np.conj(s[0, 0]) * s[1, 0]
    assert sigma[0, 3] - sigma[1, 2] == pytest.approx(2 * z.imag * dn, abs=1e-12)


def test_squeezed_standard_form_preserves_invariants():
    from scatterq.gaussian import invariants

    s = haar_random(6, 17)
    sigma = output_covariance(Squeezed(0.5, math.pi / 3), s, ModePair(0, 1, 2))
    before = np.array(invariants(sigma))
    after = np.array(invariants(standard_form(sigma).matrix()))
    assert np.allclose(after, before, rtol=1e-9, atol=1e-12)


def test_mode_pair_validation():
    s = haar_random(3, 0)
    with pytest.raises(IndexOutOfRange):
        output_covariance(Thermal(1), s, ModePair(0, 1, 3))
    with pytest.raises(IndexOutOfRange):
        output_covariance(Thermal(1), s, ModePair(0, 1, 1))
    with pytest.raises(IndexOutOfRange):
        output_covariance(Thermal(1), s, ModePair(-1, 0, 1))


def test_swap_permutes_blocks():
    s = haar_random(5, 8)
    state = Squeezed(0.7, 0.4)
    a = output_covariance(state, s, ModePair(0, 1, 3))
    b = output_covariance(state, s, ModePair(0, 3, 1))
    perm = [2, 3, 0, 1]
    assert np.allclose(a[np.ix_(perm, perm)], b, atol=1e-14)
    assert intensity_correlation(standard_form(a)) == pytest.approx(intensity_correlation(standard_form(b)), rel=1e-12)


def test_thermal_never_entangled_and_squeezed_always(rng):
    for seed in range(300):
        n = int(rng.integers(2, 12))
        s = haar_random(n, seed)
        thermal = standard_form(output_covariance(Thermal(float(rng.uniform(0, 1e3))), s, ModePair(0, 0, 1)))
        assert abs(thermal.gamma_x - thermal.gamma_p) <= 1e-12
        assert is_separable(thermal)[0]
        if min(abs(s[0, 0]), abs(s[1, 0])) > 1e-6:
            sq = output_covariance(Squeezed(float(rng.uniform(0.01, 1.5))), s, ModePair(0, 0, 1))
            assert validate_physical(sq)
            assert not is_separable(standard_form(sq))[0]


def test_thermal_covariance_examples():
    assert thermal_covariance(0.0, 0.3, 0.9) == thermal_covariance(0.0, 0.1, 0.2)
    sf = thermal_covariance(0.0, 0.3, 0.9)
    assert (sf.alpha, sf.beta, sf.gamma_x, sf.gamma_p) == (0.5, 0.5, 0.0, 0.0)
    t = 1 / math.sqrt(2)
    sf = thermal_covariance(1.0, t, t)
    assert (sf.alpha, sf.beta, sf.gamma_x, sf.gamma_p) == pytest.approx((1, 1, 0.5, 0.5), abs=1e-15)
    sf = thermal_covariance(1e3, 0.1, 0.9)
    assert (sf.alpha, sf.beta, sf.gamma_x, sf.gamma_p) == pytest.approx((10.5, 810.5, 90, 90), rel=1e-13)


@pytest.mark.parametrize("args", [(-1, 0.5, 0.5), (1, 1.2, 0.5), (1, 0.5, -0.1)])
def test_thermal_covariance_range(args):
    with pytest.raises(OutOfRange):
        thermal_covariance(*args)
