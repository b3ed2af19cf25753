"""
    compoundbh/constructions/density
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Contains approximate compound p-values for nulls with nonincreasing densities.

    Given nonnegative data, ``p_i`` is the largest value ``g(X_i)`` over convex,
    nonincreasing ``g: [0, inf) -> [0, 1]`` whose drops between consecutive order
    statistics (with ``X_(0) = 0`` and ``g(inf) = 0``) are at most
    ``Delta = log(e m^2) / m``. These are (0, 1/m)-approximate compound p-values.
"""
import dataclasses
import math

import numpy as np

from .. import errors, rng, utils
from ..hints import Array, Float, FloatSequence, Int
from ..procedures import PValueVector


@dataclasses.dataclass(frozen=True)
class DensityWeights:
    """
    Represents the increments ``w_0..w_m`` of the extremal function at the order statistics.

    ``tail[i] = w_i + ... + w_m`` is the supremum at ``X_(i)`` before clamping to 1.
    """
    delta: Float
    w: Array
    order_stats: Array

    @property
    def tail(self) -> Array:
        return np.cumsum(self.w[::-1])[::-1]


def delta_for(m: Int) -> Float:
    """
    Compute ``Delta = log(e m^2) / m = (1 + 2 log m) / m``.
    """
    return (1.0 + 2.0 * math.log(m)) / m


def decreasing_density_weights(x: FloatSequence) -> DensityWeights:
    """
    Compute the weights of the extremal convex nonincreasing function.

    ``w_m = Delta`` and for i = m-1..0,
    ``w_i = min((1 - S_{i+1}) gap_i / X_(i+1), Delta gap_i / max_{j <= i} gap_j)``
    with ``gap_i = X_(i+1) - X_(i)``, ``S_{i+1} = w_{i+1} + ... + w_m``, and
    ``w_i = 0`` on a zero gap. The first argument is floored at 0, which only
    matters when Delta >= 1; then every supremum is 1.

    :param x: Nonnegative observations
    :return: Weights with the sorted sample
    """
    x = utils.finite_array(x, 'x')
    m = x.size
    if m < 1:
        raise errors.DomainError('at least one observation is required')
    if (x < 0).any():
        raise errors.DomainError(f'observations must be nonnegative, got min {x.min()!r}')

    order_stats = np.sort(x)
    knots = np.concatenate([[0.0], order_stats])
    gaps = np.diff(knots)
    widest = np.maximum.accumulate(gaps)
    delta = delta_for(m)

    w = np.zeros(m + 1)
    w[m] = delta
    tail = delta
    for i in range(m - 1, -1, -1):
        gap = gaps[i]
        if gap > 0:
            budget = max(0.0, 1.0 - tail) * gap / knots[i + 1]
            w[i] = min(budget, delta * gap / widest[i])
        tail += w[i]
    w.setflags(write=False)
    order_stats.setflags(write=False)
    return DensityWeights(delta, w, order_stats)


def decreasing_density_pvalues(x: FloatSequence) -> PValueVector:
    """
    Compute ``p_i = min(1, w_r + ... + w_m)`` where r is the order statistic position of X_i.

    Tied observations share the same position and so the same p-value.

    :param x: Nonnegative observations
    :return: (0, 1/m)-approximate compound p-values
    """
    weights = decreasing_density_weights(x)
    x = np.asarray(x, dtype=float)
    # 1-based position of the first order statistic equal to each observation.
    ranks = np.searchsorted(weights.order_stats, x, side='left') + 1
    return PValueVector(np.minimum(1.0, weights.tail[ranks]))


@dataclasses.dataclass(frozen=True)
class DensityProfile:
    """
    Represents a simulated decreasing-density example and the curve of sorted p-values.
    """
    x: Array
    p: Array
    is_null: Array
    sorted_p: Array


def decreasing_density_profile(m: Int = 10000,
                               n_null: Int = 9000,
                               seed: Int = 0,
                               null_scale: Float = 1.0,
                               alt_mean: Float = 10.0,
                               alt_scale: Float = 2.0) -> DensityProfile:
    """
    Simulate |N(0, null_scale)| nulls and |N(alt_mean, alt_scale)| non-nulls and compute
    their decreasing-density p-values.

    :param m: Number of observations
    :param n_null: Number of nulls, placed first
    :param seed: Seed
    :return: Data, p-values, null mask and sorted p-values
    """
    if not 0 <= n_null <= m or m < 1:
        raise errors.DomainError(f'need 0 <= n_null <= m and m >= 1, got n_null={n_null}, m={m}')
    gen = rng.stream(seed, 0, rng.Family.Check)
    x = np.abs(np.concatenate([
        gen.normal(0.0, null_scale, n_null),
        gen.normal(alt_mean, alt_scale, m - n_null),
    ]))
    p = decreasing_density_pvalues(x).values
    is_null = np.arange(m) < n_null
    return DensityProfile(x, p, is_null, np.sort(p))
