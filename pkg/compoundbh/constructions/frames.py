"""
    compoundbh/constructions/frames
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Contains adapters that run constructions on tabular input.
"""
import pandas as pd

from .. import errors
from ..hints import Array, StrList
from . import density, gaussian, montecarlo, weighted

#: Prefix of the null draw columns read by the Monte Carlo construction.
NULL_PREFIX = 'null_'


def require(frame: pd.DataFrame, columns: StrList) -> None:
    missing = [c for c in columns if c not in frame.columns]
    if missing:
        raise errors.IngestColumnsMissing(missing)


def decreasing_density(frame: pd.DataFrame) -> Array:
    require(frame, ['x'])
    return density.decreasing_density_pvalues(frame['x'].to_numpy(dtype=float)).values


def weighted_frame(frame: pd.DataFrame) -> Array:
    require(frame, ['p', 'w'])
    return weighted.weighted_pvalues(frame['p'].to_numpy(dtype=float), frame['w'].to_numpy(dtype=float)).values


def gaussian_means(frame: pd.DataFrame) -> Array:
    require(frame, ['ybar', 's2', 'n'])
    summaries = [gaussian.GaussianSummary(float(row.ybar), float(row.s2), int(row.n))
                 for row in frame.itertuples(index=False)]
    return gaussian.gaussian_means_pvalues(summaries).values


def mc_pooled(frame: pd.DataFrame) -> Array:
    require(frame, ['t_obs'])
    nulls = [c for c in frame.columns if str(c).startswith(NULL_PREFIX)]
    if not nulls:
        raise errors.IngestColumnsMissing([f'{NULL_PREFIX}*'])
    return montecarlo.mc_pooled_pvalues(frame['t_obs'].to_numpy(dtype=float),
                                        frame[nulls].to_numpy(dtype=float)).values
