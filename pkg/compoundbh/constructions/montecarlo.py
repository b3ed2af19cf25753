"""
    compoundbh/constructions/montecarlo
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Contains compound p-values from Monte Carlo null draws pooled over tests.
"""
import numpy as np

from .. import errors, utils
from ..hints import Any, FloatSequence, Sequence
from ..procedures import PValueVector


def mc_pooled_pvalues(t_obs: FloatSequence, t_null: Sequence[FloatSequence]) -> PValueVector:
    """
    Compute ``p_i = (1/m) sum_j (1{T_j >= T_i} + sum_k 1{T_jk >= T_i}) / (1 + K)``.

    Each test j contributes its observed statistic and its K null draws, so the pool
    holds m (K + 1) equally weighted values.

    :param t_obs: Observed statistics T_1..T_m
    :param t_null: m lists of K null draws each
    :return: Compound p-values
    """
    observed = utils.finite_array(t_obs, 't_obs')
    m = observed.size
    if m < 1:
        raise errors.DomainError('at least one statistic is required')
    if len(t_null) != m:
        raise errors.LengthMismatch(f'{m} observed statistics but {len(t_null)} null lists')
    sizes = {len(draws) for draws in t_null}
    if len(sizes) != 1:
        raise errors.LengthMismatch(f'null lists must share one length, got {sorted(sizes)}')
    k = sizes.pop()
    if k < 1:
        raise errors.DomainError('each null list needs at least one draw')
    draws: Any = np.asarray(t_null, dtype=float)
    if not np.isfinite(draws).all():
        raise errors.NotFinite('t_null contains a non-finite value')

    pool = np.sort(np.concatenate([observed, draws.ravel()]))
    at_or_above = pool.size - np.searchsorted(pool, observed, side='left')
    return PValueVector(np.minimum(1.0, at_or_above / pool.size))
