"""
    compoundbh/constructions
    ~~~~~~~~~~~~~~~~~~~~~~~~

    Contains constructions of compound and approximate compound p-values.
"""
from .. import errors
from ..hints import Callable, Str
from . import frames
from .alignment import alignment_pooled_pvalues, gaussian_noise_sf
from .cdf import CdfBank, Orientation, avg_null_cdf_pvalues
from .density import (DensityProfile, DensityWeights, decreasing_density_pvalues, decreasing_density_profile,
                      decreasing_density_weights)
from .gaussian import GaussianSummary, gaussian_means_oracle_pvalues, gaussian_means_pvalues
from .montecarlo import mc_pooled_pvalues
from .permutation import (PooledNull, TrialData, difference_in_means, permutation_pooled_pvalues,
                          permutation_pvalues)
from .weighted import weighted_pvalues

__all__ = ['CdfBank', 'DensityProfile', 'DensityWeights', 'GaussianSummary', 'Orientation', 'PooledNull', 'TrialData',
           'alignment_pooled_pvalues', 'avg_null_cdf_pvalues', 'decreasing_density_profile',
           'decreasing_density_pvalues', 'decreasing_density_weights', 'difference_in_means', 'for_type',
           'gaussian_means_oracle_pvalues', 'gaussian_means_pvalues', 'gaussian_noise_sf', 'mc_pooled_pvalues',
           'permutation_pooled_pvalues', 'permutation_pvalues', 'weighted_pvalues']


class ConstructionType:
    """
    Known constructions that run on a CSV table.
    """
    DecreasingDensity = 'decreasing-density'
    Weighted = 'weighted'
    GaussianMeans = 'gaussian-means'
    MCPooled = 'mc-pooled'


TYPES = {
    ConstructionType.DecreasingDensity: frames.decreasing_density,
    ConstructionType.Weighted: frames.weighted_frame,
    ConstructionType.GaussianMeans: frames.gaussian_means,
    ConstructionType.MCPooled: frames.mc_pooled,
}


def for_type(construction: Str) -> Callable:
    """
    Return the table adapter of the given construction.

    :param construction: Construction name
    :return: Callable taking a :class:`pandas.DataFrame` and returning p-values
    """
    adapter = TYPES.get(construction)
    if not adapter:
        raise errors.ConstructionTypeNotSupported(construction)
    return adapter
