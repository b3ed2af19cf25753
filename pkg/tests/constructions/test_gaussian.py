"""
    test_gaussian
    ~~~~~~~~~~~~~

    Tests for the :mod:`~compoundbh.constructions.gaussian` module.
"""
import math

import numpy as np
import pytest

from compoundbh import errors, numerics
from compoundbh.constructions import GaussianSummary, gaussian_means_oracle_pvalues, gaussian_means_pvalues
from compoundbh.constructions import gaussian
from compoundbh.constructions.gaussian import summarize


def test_zero_mean_gives_one():
    p = gaussian_means_pvalues([GaussianSummary(0.0, 1.0, 5), GaussianSummary(2.0, 1.0, 5)]).values
    assert p[0] == 1.0


def test_single_test_is_self_pooled():
    n, ybar, s2 = 6, 0.8, 1.7
    expected = 1 - numerics.reg_inc_beta(min(1.0, n * ybar ** 2 / ((n - 1) * s2)), 0.5, n / 2 - 1)
    p = gaussian_means_pvalues([GaussianSummary(ybar, s2, n)]).values
    assert p[0] == pytest.approx(expected, rel=1e-12)


def test_variance_identity_by_monte_carlo():
    n, sigma, y, draws = 5, 1.0, 1.0, 400000
    x = sigma ** 2 * np.random.default_rng(8).chisquare(n - 1, size=draws)
    values = 1 - numerics.reg_inc_beta_many(y ** 2 / x, 0.5, n / 2 - 1)
    se = values.std(ddof=1) / math.sqrt(draws)
    assert abs(values.mean() - 2 * numerics.normal_sf(y / sigma)) <= 4 * se


@pytest.mark.slow
def test_variance_identity_by_monte_carlo_at_scale():
    n, draws = 5, 1000000
    x = np.random.default_rng(18).chisquare(n - 1, size=draws)
    values = 1 - numerics.reg_inc_beta_many(1.0 / x, 0.5, n / 2 - 1)
    se = values.std(ddof=1) / math.sqrt(draws)
    assert abs(values.mean() - 2 * numerics.normal_sf(1.0)) <= 3 * se


def test_approximate_validity_under_global_null():
    gen = np.random.default_rng(21)
    m, n, reps = 30, 5, 300
    sigmas = gen.uniform(0.5, 4.0, size=m)
    grid = np.array([0.05, 0.1, 0.2])
    below = np.empty((reps, grid.size))
    for r in range(reps):
        samples = gen.normal(size=(m, n)) * sigmas[:, None]
        p = gaussian_means_pvalues([summarize(row) for row in samples]).values
        below[r] = (p[:, None] <= grid[None, :]).mean(axis=0)
    se = below.std(axis=0, ddof=1) / math.sqrt(reps)
    assert np.all(below.mean(axis=0) <= grid + 1 / m + 3 * se)


def test_oracle_pvalues():
    p = gaussian_means_oracle_pvalues([0.0, 1.0], [1.0, 2.0], 4).values
    assert p[0] == 1.0
    expected = (2 * numerics.normal_sf(2.0) + 2 * numerics.normal_sf(1.0)) / 2
    assert p[1] == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize('ybar, s2, n', [(0.0, 0.0, 5), (0.0, 1.0, 2), (float('nan'), 1.0, 5), (0.0, -1.0, 4)])
def test_invalid_summaries(ybar, s2, n):
    with pytest.raises(errors.DomainError):
        GaussianSummary(ybar, s2, n)


def test_heterogeneous_sizes_rejected():
    with pytest.raises(errors.DomainError):
        gaussian_means_pvalues([GaussianSummary(0.1, 1.0, 5), GaussianSummary(0.1, 1.0, 6)])


def test_blocks_match_direct_computation(monkeypatch):
    summaries = [GaussianSummary(float(v), 1.0 + i / 10, 7) for i, v in enumerate(np.linspace(-2, 2, 9))]
    direct = gaussian_means_pvalues(summaries).values
    monkeypatch.setattr(gaussian, 'BLOCK_ROWS', 2)
    np.testing.assert_allclose(gaussian_means_pvalues(summaries).values, direct, rtol=1e-15)
