"""
    compoundbh/actions/estimate
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Contains functionality for the `estimate` action.
"""
import dataclasses

from .. import loggers, reports, results, scenarios, serde, simulation
from ..config import ApproxParams, ExperimentConfig
from ..hints import FilePath, Float, Int, OptionalStr, Str

LOG = loggers.get_logger()


@results.wrapper
def estimate(path: FilePath,
             alpha: Float,
             reps: Int,
             seed: Int,
             workers: Int,
             metric: Str,
             epsilon: Float,
             delta: Float,
             out: OptionalStr = None) -> results.Result:
    """
    Responsible for estimating the FDR of BH on a scenario JSON file.

    :param path: Scenario JSON document
    :param alpha: Level
    :param reps: Replicates
    :param seed: Seed
    :param workers: joblib worker count
    :param metric: Metric name
    :param epsilon: Multiplicative slack of the modified FDR
    :param delta: Additive slack of the modified FDR
    :param out: Optional JSON file to write the estimate to
    :return: Result of the estimate action
    """
    s = scenarios.read(path)
    params = ApproxParams(epsilon, delta)
    violation = scenarios.approx_validity_check(s, params)
    if violation > 0:
        LOG.warning(f'{s.name} violates (epsilon, delta) validity by {violation!r}')
    cfg = ExperimentConfig(scenario=s, alpha=alpha, reps=reps, seed=seed, metric=metric, params=params,
                           workers=workers)
    est = simulation.estimate_fdr(cfg)
    document = dataclasses.asdict(est)
    document['validity_violation'] = violation
    if out:
        reports.write_json(document, out)
    return results.success(stdout=serde.dumps(document))
