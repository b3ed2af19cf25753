"""
    compoundbh/constructions/alignment
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Contains compound p-values for testing whether noisy copies align with unlabeled originals.

    Unlabeled points x_1..x_m are observed once; ``x_tilde_i`` is claimed to be
    ``x_i + omega`` for noise omega with a known law. With ``noise_sf(t, x_j) =
    P(T(x_j + omega) >= t)``, ``p_i = (1/m) sum_j noise_sf(T(x_tilde_i), x_j)``.
"""
import numpy as np

from .. import errors, numerics, utils
from ..hints import Any, Callable, Float, Sequence
from ..procedures import PValueVector

NoiseSF = Callable[[Float, Any], Float]


def identity(x: Any) -> Float:
    return float(x)


def gaussian_noise_sf(sigma: Float = 1.0) -> NoiseSF:
    """
    Right tail of ``x_j + N(0, sigma^2)`` for scalar points and the identity statistic.
    """
    if utils.require_finite(sigma, 'sigma') <= 0:
        raise errors.DomainError(f'sigma={sigma!r} must be positive')

    def sf(t: Float, x_j: Any) -> Float:
        return numerics.normal_sf((t - float(x_j)) / sigma)

    return sf


def alignment_pooled_pvalues(x_unlabeled: Sequence[Any],
                             x_tilde: Sequence[Any],
                             noise_sf: NoiseSF,
                             t_fn: Callable[[Any], Float] = identity) -> PValueVector:
    """
    Compute ``p_i = (1/m) sum_j noise_sf(T(x_tilde_i), x_j)``.

    :param x_unlabeled: Original points
    :param x_tilde: Noisy points, one per original
    :param noise_sf: Right tail of the statistic under noise around a given point
    :param t_fn: Statistic T
    :return: Compound p-values
    """
    if len(x_unlabeled) != len(x_tilde):
        raise errors.LengthMismatch(f'{len(x_unlabeled)} originals but {len(x_tilde)} noisy points')
    if not x_unlabeled:
        raise errors.DomainError('at least one point is required')
    stats = [utils.require_finite(t_fn(x), 'T(x_tilde)') for x in x_tilde]
    p = np.array([np.mean([noise_sf(t, x_j) for x_j in x_unlabeled]) for t in stats])
    return PValueVector(utils.clamp_unit(p))
