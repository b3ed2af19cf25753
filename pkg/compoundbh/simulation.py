"""
    compoundbh/simulation
    ~~~~~~~~~~~~~~~~~~~~~

    Contains seeded Monte Carlo estimation of the FDR of BH on a scenario.

    Replicate r draws from the counter-based stream ``(seed, r)``; replicates are run
    in fixed-size chunks that joblib may spread over workers, and per-replicate values
    are merged in replicate order, so estimates do not depend on the worker count.
"""
import dataclasses
import math

import joblib
import numpy as np

from . import errors, loggers, procedures, rng
from .config import ApproxParams, ExperimentConfig, Metric
from .hints import Array, Float, Int, OptionalFloat, Str

LOG = loggers.get_logger()


@dataclasses.dataclass(frozen=True)
class FdrEstimate:
    """
    Represents a Monte Carlo estimate of an expected per-replicate metric.
    """
    mean: Float
    se: Float
    reps: Int
    seed: Int
    exact: OptionalFloat = None
    metric: Str = Metric.FDR
    scenario: Str = ''

    def within(self, reference: Float, multiplier: Float = 3.0) -> bool:
        """
        Check ``|mean - reference| <= multiplier * se``.
        """
        return abs(self.mean - reference) <= multiplier * self.se + 1e-12

    def at_most(self, bound: Float, multiplier: Float = 3.0) -> bool:
        """
        Check ``mean <= bound + multiplier * se``.
        """
        return self.mean <= bound + multiplier * self.se + 1e-12


def replicate_value(p: Array, null_mask: Array, alpha: Float, metric: Str, params: ApproxParams) -> Float:
    """
    Run BH on one p-value draw and evaluate the metric.

    :param p: Sampled p-values
    :param null_mask: Boolean null indicator, aligned with p
    :param alpha: Level
    :param metric: One of :data:`~compoundbh.config.METRICS`
    :param params: Approximation slack used by the modified FDR
    :return: Metric value of the draw
    """
    k_hat, threshold = procedures.step_up(p, alpha)
    if k_hat == 0:
        return 0.0
    rejected = p <= threshold
    false = int(np.count_nonzero(rejected & null_mask))
    if metric == Metric.AnyRejection:
        return 1.0
    if metric == Metric.FDR:
        return false / k_hat
    slack = p.size * params.delta / (alpha * (1 + params.epsilon)) if params.delta > 0 else 0.0
    return false / (slack + k_hat)


def run_chunk(cfg: ExperimentConfig, start: Int, stop: Int) -> Array:
    """
    Compute metric values of replicates ``start..stop - 1``.
    """
    scenario = cfg.scenario
    null_mask = scenario.null_mask_array()
    out = np.empty(stop - start)
    for r in range(start, stop):
        try:
            p = scenario.draw(rng.stream(cfg.seed, r))
        except Exception as ex:
            raise errors.SamplingFailed(r, ex) from ex
        out[r - start] = replicate_value(p, null_mask, cfg.alpha, cfg.metric, cfg.params)
    return out


def replicate_values(cfg: ExperimentConfig) -> Array:
    """
    Compute the metric value of every replicate, in replicate order.
    """
    bounds = [(start, min(start + cfg.chunk, cfg.reps)) for start in range(0, cfg.reps, cfg.chunk)]
    chunks = joblib.Parallel(n_jobs=cfg.workers)(
        joblib.delayed(run_chunk)(cfg, start, stop) for start, stop in bounds
    )
    return np.concatenate(chunks)


def estimate_fdr(cfg: ExperimentConfig) -> FdrEstimate:
    """
    Estimate the expected metric of BH at level ``cfg.alpha`` on ``cfg.scenario``.

    :param cfg: Experiment configuration
    :return: Mean, standard error ``sd / sqrt(reps)`` and the scenario's exact FDR if known
    """
    if cfg.metric == Metric.ModifiedFDR and cfg.params.delta > 0 and cfg.alpha == 0:
        raise errors.DomainError('modified FDR with delta > 0 requires alpha > 0')
    LOG.debug(f'estimating {cfg.metric} of {cfg.scenario_id} at alpha={cfg.alpha} with {cfg.reps} replicates')
    values = replicate_values(cfg)
    mean = float(values.mean())
    se = float(values.std(ddof=1) / math.sqrt(cfg.reps)) if cfg.reps > 1 else 0.0
    exact = exact_reference(cfg)
    return FdrEstimate(mean, se, cfg.reps, cfg.seed, exact, cfg.metric, cfg.scenario_id)


def exact_reference(cfg: ExperimentConfig) -> OptionalFloat:
    """
    The scenario's exact FDR, when it was derived for the configured level and metric.
    """
    if cfg.metric != Metric.FDR:
        return None
    built_for = getattr(cfg.scenario, 'meta', {}).get('alpha', cfg.alpha)
    return getattr(cfg.scenario, 'exact_fdr', None) if built_for == cfg.alpha else None
