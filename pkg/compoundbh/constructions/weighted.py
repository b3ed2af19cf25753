"""
    compoundbh/constructions/weighted
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Contains weighted p-values.
"""
import math

import numpy as np

from .. import defaults, errors, procedures, utils
from ..hints import FloatSequence
from ..procedures import PValueLike, PValueVector


def weighted_pvalues(pstar: PValueLike, w: FloatSequence) -> PValueVector:
    """
    Compute ``p_i = min(p*_i / w_i, 1)`` for positive weights summing to m.

    If p*_1..p*_m are p-values (or compound p-values) these are compound p-values.

    :param pstar: Input p-values
    :param w: Positive weights with ``sum w = m``
    :return: Weighted p-values
    """
    p = procedures.as_array(pstar)
    weights = utils.finite_array(w, 'w')
    if weights.size != p.size:
        raise errors.LengthMismatch(f'{p.size} p-values but {weights.size} weights')
    if (weights <= 0).any():
        raise errors.WeightsInvalid(f'weights must be positive, got min {weights.min()!r}')
    total = math.fsum(weights)
    if abs(total - p.size) > defaults.WEIGHT_SUM_TOL:
        raise errors.WeightsInvalid(f'weights sum to {total!r}, expected {p.size}')
    return PValueVector(np.minimum(p / weights, 1.0))
