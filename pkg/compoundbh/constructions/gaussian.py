"""
    compoundbh/constructions/gaussian
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Contains compound p-values for Gaussian means with unknown, test specific variances.

    With ``Y_ij ~ N(mu_i, sigma_i^2)`` for j = 1..n, the null is ``mu_i = 0``. Each test
    supplies its sample mean and variance; the variance of test j stands in for
    sigma_j when pooling, through the identity
    ``E[1 - F_Beta(1/2, n/2 - 1)(y^2 / X)] = 2 Phi_bar(y / sigma)`` for
    ``X ~ sigma^2 chi^2_{n-1}``.
"""
import dataclasses

import numpy as np

from .. import errors, numerics, utils
from ..hints import Array, Callable, Float, FloatSequence, Int, Sequence
from ..procedures import PValueVector

#: Rows of the m x m pooling matrix computed at once.
BLOCK_ROWS = 1024


@dataclasses.dataclass(frozen=True)
class GaussianSummary:
    """
    Represents the sample mean, sample variance and size of one test.
    """
    ybar: Float
    s2: Float
    n: Int

    def __post_init__(self):
        utils.require_finite(self.ybar, 'ybar')
        if utils.require_finite(self.s2, 's2') <= 0:
            raise errors.DomainError(f's2={self.s2!r} must be positive')
        if utils.require_count(self.n, 'n') < 3:
            raise errors.DomainError(f'n={self.n} must be >= 3')


def _common_n(summaries: Sequence[GaussianSummary]) -> Int:
    if not summaries:
        raise errors.DomainError('at least one summary is required')
    sizes = {s.n for s in summaries}
    if len(sizes) != 1:
        raise errors.DomainError(f'all tests must share one sample size, got {sorted(sizes)}')
    return sizes.pop()


def _pooled(ybar: Array, kernel: Callable[[Array], Array]) -> Array:
    p = np.empty(ybar.size)
    for start in range(0, ybar.size, BLOCK_ROWS):
        block = ybar[start:start + BLOCK_ROWS]
        p[start:start + BLOCK_ROWS] = kernel(block).mean(axis=1)
    return utils.clamp_unit(p)


def gaussian_means_pvalues(summaries: Sequence[GaussianSummary]) -> PValueVector:
    """
    Compute ``p_i = (1/m) sum_j (1 - F_Beta(1/2, n/2 - 1)(n Ybar_i^2 / ((n - 1) S_j^2)))``.

    These are (0, 1/m)-approximate compound p-values.

    :param summaries: One summary per test, all with the same n >= 3
    :return: P-values
    """
    n = _common_n(summaries)
    ybar = np.array([s.ybar for s in summaries], dtype=float)
    s2 = np.array([s.s2 for s in summaries], dtype=float)

    def kernel(block: Array) -> Array:
        return 1.0 - numerics.reg_inc_beta_many((n * block[:, None] ** 2) / ((n - 1) * s2[None, :]), 0.5, n / 2 - 1)

    return PValueVector(_pooled(ybar, kernel))


def gaussian_means_oracle_pvalues(ybar: FloatSequence, sigmas: FloatSequence, n: Int) -> PValueVector:
    """
    Compute the known-variance compound p-values ``p*_i = (1/m) sum_j 2 Phi_bar(|Ybar_i| sqrt(n) / sigma_j)``.

    :param ybar: Sample means
    :param sigmas: True standard deviations
    :param n: Common sample size
    :return: Compound p-values
    """
    ybar = utils.finite_array(ybar, 'ybar')
    sigmas = utils.finite_array(sigmas, 'sigmas')
    if ybar.size != sigmas.size or ybar.size < 1:
        raise errors.LengthMismatch(f'{ybar.size} means but {sigmas.size} standard deviations')
    if (sigmas <= 0).any() or utils.require_count(n, 'n') < 1:
        raise errors.DomainError('standard deviations and n must be positive')
    se = sigmas / np.sqrt(n)

    def kernel(block: Array) -> Array:
        return 2.0 * numerics.normal_sf_many(np.abs(block)[:, None] / se[None, :])

    return PValueVector(_pooled(ybar, kernel))


def summarize(samples: Array) -> GaussianSummary:
    """
    Summarize one row of observations by its mean and unbiased variance.
    """
    samples = utils.finite_array(samples, 'samples')
    return GaussianSummary(float(samples.mean()), float(samples.var(ddof=1)), int(samples.size))
