import math

import numpy as np
import pytest
from scipy import stats

from core.errors import DomainError
from core.sampling import log_standard_gamma, standard_gamma


@pytest.mark.parametrize("alpha", [0.0, -1.0, math.nan, math.inf])
def test_rejects_bad_shape(alpha, rng):
    with pytest.raises(DomainError):
        log_standard_gamma(alpha, rng, 10)


def test_rejects_negative_count(rng):
    with pytest.raises(DomainError):
        log_standard_gamma(2.0, rng, -1)


def test_zero_draws(rng):
    draws = log_standard_gamma(2.0, rng, 0)
    assert draws.shape == (0,)


@pytest.mark.parametrize("alpha", [0.2, 1.0, 7.5])
def test_shape_and_finiteness(alpha, rng):
    draws = log_standard_gamma(alpha, rng, 5000)
    assert draws.shape == (5000,)
    assert np.all(np.isfinite(draws))


def test_same_seed_same_stream():
    first = log_standard_gamma(0.7, np.random.default_rng(7), 1000)
    second = log_standard_gamma(0.7, np.random.default_rng(7), 1000)
    np.testing.assert_array_equal(first, second)
    other = log_standard_gamma(0.7, np.random.default_rng(8), 1000)
    assert not np.array_equal(first, other)


def test_standard_gamma_is_exp_of_log_draws():
    draws = standard_gamma(3.0, np.random.default_rng(3), 100)
    logs = log_standard_gamma(3.0, np.random.default_rng(3), 100)
    np.testing.assert_allclose(draws, np.exp(logs), rtol=1e-15)


@pytest.mark.slow
@pytest.mark.parametrize("alpha", [0.05, 0.3, 1.0, 2.5, 60.0])
def test_log_draws_follow_log_gamma(alpha, rng):
    # ln G for G ~ Gamma(alpha) is scipy's loggamma(alpha)
    draws = log_standard_gamma(alpha, rng, 20_000)
    assert stats.kstest(draws, stats.loggamma(alpha).cdf).pvalue > 1e-3


@pytest.mark.slow
@pytest.mark.parametrize("alpha", [0.5, 4.0, 250.0])
def test_sample_mean_and_variance(alpha, rng):
    n = 100_000
    draws = standard_gamma(alpha, rng, n)
    # mean and variance of StdGamma(alpha) are both alpha
    assert abs(draws.mean() - alpha) < 5.0 * math.sqrt(alpha / n)
    assert draws.var() == pytest.approx(alpha, rel=0.05)
