"""
    compoundbh/constructions/permutation
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Contains compound p-values from permutation tests pooled over many small trials.

    The null statistics of trial j are its statistic under every treated/control
    assignment, each assignment weighted ``1 / (m K_j)``. Pooling them across trials
    gives one null distribution, and ``p_i`` is its mass at or above ``T_i``.
    The statistic must depend on a trial only through which units are treated, so
    averaging over permutations reduces to averaging over assignments.
"""
import dataclasses
import itertools
import math

import joblib
import numpy as np

from .. import defaults, errors, loggers, rng
from ..hints import Any, Array, Callable, Float, Int, IntSet, List, Sequence, Tuple
from ..procedures import PValueVector

LOG = loggers.get_logger()


@dataclasses.dataclass(frozen=True)
class TrialData:
    """
    Represents the units of one trial; the first `n_treated` units are treated.

    `values` has one row per unit (or one entry per unit for scalar data).
    """
    values: Array
    n_treated: Int

    def __post_init__(self):
        values = np.asarray(self.values)
        object.__setattr__(self, 'values', values)
        if values.ndim not in (1, 2):
            raise errors.DomainError(f'trial values must be 1 or 2 dimensional, got shape {values.shape}')
        if not 1 <= self.n_treated < values.shape[0]:
            raise errors.TrialDegenerate(f'n_treated={self.n_treated} outside [1, {values.shape[0] - 1}]')

    @property
    def n(self) -> Int:
        return int(self.values.shape[0])

    @property
    def treated(self) -> Array:
        return self.values[:self.n_treated]

    @property
    def control(self) -> Array:
        return self.values[self.n_treated:]

    def assignment_count(self) -> Int:
        return math.comb(self.n, self.n_treated)

    def assign(self, treated: Sequence[Int]) -> 'TrialData':
        """
        Return the trial relabelled so the given unit indices are the treated ones.
        """
        mask = np.zeros(self.n, dtype=bool)
        mask[list(treated)] = True
        order = np.concatenate([np.flatnonzero(mask), np.flatnonzero(~mask)])
        return TrialData(self.values[order], int(mask.sum()))


Statistic = Callable[[TrialData], Float]


def difference_in_means(trial: TrialData) -> Float:
    """
    Mean of treated units minus mean of control units.
    """
    return float(np.mean(trial.treated) - np.mean(trial.control))


def assignments(trial: TrialData, exact_cap: Int, mc_draws: Int, seed: Int, index: Int) -> Tuple[Array, bool]:
    """
    Build the treated masks the null distribution of a trial is averaged over.

    All C(n, n_treated) assignments are listed when there are at most `exact_cap`;
    otherwise the identity assignment plus `mc_draws` uniformly sampled ones. Row 0
    is always the observed assignment.

    :param trial: Trial
    :param exact_cap: Largest assignment count enumerated exactly
    :param mc_draws: Number of sampled assignments otherwise
    :param seed: Seed of the sampled assignments
    :param index: Trial index, selecting the random stream
    :return: Boolean array (assignments x units) and whether it was sampled
    """
    n, k = trial.n, trial.n_treated
    if trial.assignment_count() <= exact_cap:
        masks = np.zeros((trial.assignment_count(), n), dtype=bool)
        for row, treated in enumerate(itertools.combinations(range(n), k)):
            masks[row, list(treated)] = True
        return masks, False
    gen = rng.stream(seed, index, rng.Family.Trial)
    picks = np.argsort(gen.random((mc_draws, n)), axis=1)[:, :k]
    masks = np.zeros((mc_draws + 1, n), dtype=bool)
    masks[0, :k] = True
    np.put_along_axis(masks[1:], picks, True, axis=1)
    return masks, True


def null_statistics(trial: TrialData, statistic: Statistic, masks: Array) -> Array:
    """
    Evaluate the statistic under every assignment. Statistics exposing a
    ``batch(trial, masks)`` method are evaluated in one call.
    """
    batch = getattr(statistic, 'batch', None)
    if batch is not None:
        return np.asarray(batch(trial, masks), dtype=float)
    return np.array([statistic(trial.assign(np.flatnonzero(mask))) for mask in masks], dtype=float)


@dataclasses.dataclass(frozen=True)
class TrialNull:
    """
    Represents the null statistics of one trial. `observed` is the identity assignment value.
    """
    observed: Float
    values: Array
    approximated: bool


def trial_null(trial: TrialData, statistic: Statistic, exact_cap: Int, mc_draws: Int, seed: Int,
               index: Int) -> TrialNull:
    masks, approximated = assignments(trial, exact_cap, mc_draws, seed, index)
    values = null_statistics(trial, statistic, masks)
    if not np.isfinite(values).all():
        raise errors.NotFinite(f'statistic of trial {index} produced a non-finite value')
    return TrialNull(float(values[0]), np.sort(values), approximated)


@dataclasses.dataclass(frozen=True)
class PooledNull:
    """
    Represents the pooled null distribution: sorted statistic values with weights,
    each trial contributing total weight 1 / m.
    """
    values: Array
    tail: Array
    observed: Array
    trials: Tuple[TrialNull, ...]

    @property
    def m(self) -> Int:
        return len(self.trials)

    @property
    def approximated(self) -> IntSet:
        """
        0-based indices of trials whose assignments were sampled.
        """
        return frozenset(j for j, t in enumerate(self.trials) if t.approximated)

    @classmethod
    def from_trials(cls, trials: Sequence[TrialData], statistic: Statistic,
                    exact_cap: Int = defaults.EXACT_CAP,
                    mc_draws: Int = defaults.MC_DRAWS,
                    seed: Int = defaults.SEED,
                    workers: Int = 1) -> 'PooledNull':
        """
        Compute the null statistics of every trial and pool them.

        :param trials: Trials
        :param statistic: Assignment-invariant statistic
        :param exact_cap: Largest assignment count enumerated exactly
        :param mc_draws: Sampled assignments for larger trials
        :param seed: Seed of the sampled assignments
        :param workers: joblib worker count
        :return: Pooled null distribution
        """
        if not trials:
            raise errors.DomainError('at least one trial is required')
        if exact_cap < 1 or mc_draws < 1:
            raise errors.DomainError(f'exact_cap and mc_draws must be >= 1, got {exact_cap}, {mc_draws}')
        nulls: List[TrialNull] = joblib.Parallel(n_jobs=workers)(
            joblib.delayed(trial_null)(trial, statistic, exact_cap, mc_draws, seed, j)
            for j, trial in enumerate(trials)
        )
        m = len(nulls)
        values = np.concatenate([t.values for t in nulls])
        weights = np.concatenate([np.full(t.values.size, 1.0 / (m * t.values.size)) for t in nulls])
        order = np.argsort(values, kind='stable')
        values = values[order]
        tail = np.append(np.cumsum(weights[order][::-1])[::-1], 0.0)
        sampled = sum(t.approximated for t in nulls)
        if sampled:
            LOG.warning(f'{sampled} of {m} trials exceed {exact_cap} assignments; their null is sampled')
        return cls(values, tail, np.array([t.observed for t in nulls]), tuple(nulls))

    def pvalue(self, t: Float) -> Float:
        """
        Pooled null mass at or above t.
        """
        return float(min(1.0, self.tail[np.searchsorted(self.values, t, side='left')]))

    def pooled_pvalues(self) -> Array:
        idx = np.searchsorted(self.values, self.observed, side='left')
        return np.minimum(1.0, self.tail[idx])

    def single_trial_pvalues(self) -> Array:
        """
        Classical permutation p-values: the fraction of each trial's own null at or above its statistic.
        """
        return np.array([
            (t.values.size - np.searchsorted(t.values, t.observed, side='left')) / t.values.size
            for t in self.trials
        ])


def permutation_pooled_pvalues(trials: Sequence[TrialData],
                               statistic: Statistic,
                               exact_cap: Int = defaults.EXACT_CAP,
                               seed: Int = defaults.SEED,
                               mc_draws: Int = defaults.MC_DRAWS,
                               workers: Int = 1) -> PValueVector:
    """
    Compute compound p-values by pooling the permutation null of every trial.

    :param trials: Trials
    :param statistic: Assignment-invariant statistic; large values are evidence
    :param exact_cap: Largest assignment count enumerated exactly
    :param seed: Seed of the sampled assignments
    :return: Compound p-values
    """
    pooled = PooledNull.from_trials(trials, statistic, exact_cap, mc_draws, seed, workers)
    return PValueVector(pooled.pooled_pvalues())


def permutation_pvalues(trials: Sequence[TrialData],
                        statistic: Statistic,
                        exact_cap: Int = defaults.EXACT_CAP,
                        seed: Int = defaults.SEED,
                        mc_draws: Int = defaults.MC_DRAWS,
                        workers: Int = 1) -> PValueVector:
    """
    Compute the classical permutation p-value of every trial on its own.
    """
    pooled = PooledNull.from_trials(trials, statistic, exact_cap, mc_draws, seed, workers)
    return PValueVector(pooled.single_trial_pvalues())


def as_trials(groups: Sequence[Tuple[Any, Any]]) -> List[TrialData]:
    """
    Build trials from (treated values, control values) pairs.
    """
    return [TrialData(np.concatenate([np.asarray(a), np.asarray(b)]), len(a)) for a, b in groups]
